// SPDX-License-Identifier: Apache-2.0
#include "wsp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wsp {

Grid::Grid(std::vector<double> nodes, std::vector<double> weights, Rep rep)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), rep_(rep) {
  if (nodes_.size() < kMinNodes) {
    std::ostringstream os;
    os << "grid needs at least " << kMinNodes << " nodes, got " << nodes_.size();
    throw Error(ErrorCode::TooFewNodes, os.str());
  }
  if (weights_.size() != nodes_.size()) throw Error(ErrorCode::InvalidArgument, "weights/nodes length mismatch");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i]) || !std::isfinite(weights_[i])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite grid node or weight");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw Error(ErrorCode::InvalidArgument, "grid nodes must be strictly increasing");
    if (!(weights_[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid weights must be positive");
  }
  const double span = nodes_.back() - nodes_.front();
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - span) > 1e-10 * span) {
    throw Error(ErrorCode::InvalidArgument, "grid weights do not sum to the grid span");
  }
}

Grid Grid::trapezoid(std::vector<double> nodes, Rep rep) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = nodes[i + 1] - nodes[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return Grid(std::move(nodes), std::move(w), rep);
}

bool Grid::is_uniform(double rel_tol) const noexcept {
  const double h = (nodes_.back() - nodes_.front()) / static_cast<double>(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (std::abs((nodes_[i + 1] - nodes_[i]) - h) > rel_tol * h) return false;
  }
  return true;
}

double Grid::spacing() const {
  if (!is_uniform()) throw Error(ErrorCode::NonUniformGrid, "grid spacing is not uniform");
  return (nodes_.back() - nodes_.front()) / static_cast<double>(nodes_.size() - 1);
}

bool Grid::same_as(const Grid& other) const noexcept {
  return rep_ == other.rep_ && nodes_ == other.nodes_ && weights_ == other.weights_;
}

bool same_grid(const Grid& a, const Grid& b) noexcept { return &a == &b || a.same_as(b); }

namespace {

GridPtr uniform_grid(double lo, double hi, std::size_t n, Rep rep) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream os;
    os << "need lo < hi, got [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::BadBounds, os.str());
  }
  if (n < kMinNodes) {
    std::ostringstream os;
    os << "grid needs at least " << kMinNodes << " nodes, got " << n;
    throw Error(ErrorCode::TooFewNodes, os.str());
  }
  const double h = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = lo + static_cast<double>(i) * h;
  nodes.back() = hi;
  std::vector<double> w(n, h);
  w.front() = w.back() = 0.5 * h;
  return std::make_shared<const Grid>(std::move(nodes), std::move(w), rep);
}

}  // namespace

GridPtr uniform_x_grid(double xmin, double xmax, std::size_t n) { return uniform_grid(xmin, xmax, n, Rep::x_domain); }

GridPtr uniform_w_grid(const Superpotential& /*W*/, double wmin, double wmax, std::size_t n) {
  return uniform_grid(wmin, wmax, n, Rep::w_domain);
}

GridPtr uniform_u_grid(double umin, double umax, std::size_t n) { return uniform_grid(umin, umax, n, Rep::w_domain); }

GridPtr uniform_p_grid(double pmin, double pmax, std::size_t n) { return uniform_grid(pmin, pmax, n, Rep::w_domain); }

std::vector<double> x_images(const Superpotential& W, const Grid& grid) {
  std::vector<double> x(grid.nodes().begin(), grid.nodes().end());
  if (grid.rep() == Rep::w_domain) {
    for (double& v : x) v = W.invert(v);
  }
  return x;
}

std::vector<double> u_coordinates(const Superpotential& W, const Grid& grid) {
  std::vector<double> u(grid.nodes().begin(), grid.nodes().end());
  if (grid.rep() == Rep::x_domain) {
    for (double& v : u) v = W.eval(v);
  }
  return u;
}

std::vector<double> jacobian(const Superpotential& W, const Grid& grid) {
  std::vector<double> x = x_images(W, grid);
  for (double& v : x) v = W.derivative(v);
  return x;
}

std::vector<double> dw_weights(const Superpotential& W, const Grid& grid) {
  std::vector<double> w(grid.weights().begin(), grid.weights().end());
  if (grid.rep() == Rep::x_domain) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= W.derivative(grid.node(i));
  }
  return w;
}

SampledSignal::SampledSignal(GridPtr grid, std::vector<cplx> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw Error(ErrorCode::InvalidArgument, "signal needs a grid");
  if (values_.size() != grid_->size()) {
    throw Error(ErrorCode::GridMismatch, "signal length does not match its grid");
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "signal has non-finite samples");
    }
  }
}

SampledSignal SampledSignal::zeros(GridPtr grid) {
  const std::size_t n = grid ? grid->size() : 0;
  return SampledSignal(std::move(grid), std::vector<cplx>(n));
}

namespace {

// Weight applied to conj(f_i) g_i for the requested measure.
std::vector<double> measure_weights(const Grid& grid, Measure measure, const Superpotential* W) {
  std::vector<double> w(grid.weights().begin(), grid.weights().end());
  const bool native = (grid.rep() == Rep::x_domain) == (measure == Measure::dx);
  if (native) return w;
  if (W == nullptr) throw Error(ErrorCode::InvalidArgument, "measure change requires a superpotential");
  if (grid.rep() == Rep::x_domain) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= W->derivative(grid.node(i));
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double d = W->derivative(W->invert(grid.node(i)));
      if (!(d > 0.0)) throw Error(ErrorCode::SingularJacobian, "dx measure on a w grid needs W' > 0");
      w[i] /= d;
    }
  }
  return w;
}

}  // namespace

cplx inner_product(const SampledSignal& f, const SampledSignal& g, Measure measure, const Superpotential* W) {
  if (!same_grid(*f.grid(), *g.grid())) throw Error(ErrorCode::GridMismatch, "inner product of signals on different grids");
  const std::vector<double> w = measure_weights(*f.grid(), measure, W);
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < w.size(); ++i) acc += std::conj(f[i]) * g[i] * w[i];
  return acc;
}

double norm_squared(const SampledSignal& f, Measure measure, const Superpotential* W) {
  const std::vector<double> w = measure_weights(*f.grid(), measure, W);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += std::norm(f[i]) * w[i];
  return acc;
}

std::vector<cplx> interpolate(std::span<const double> s, std::span<const cplx> v, std::span<const double> t,
                              int order, std::size_t* clipped) {
  if (order != 1 && order != 3 && order != 5 && order != 7) {
    throw Error(ErrorCode::InvalidArgument, "interpolation order must be 1, 3, 5 or 7");
  }
  if (s.size() != v.size() || s.size() < 2) throw Error(ErrorCode::InvalidArgument, "bad interpolation samples");
  const std::size_t n = s.size();
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(order) + 1, n);
  const double slack = 1e-12 * (s.back() - s.front());
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(m / 2) - 1;

  std::vector<cplx> out(t.size());
  std::size_t outside = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double tk = t[k];
    if (tk < s.front() - slack || tk > s.back() + slack) {
      ++outside;
      continue;
    }
    const auto upper = std::upper_bound(s.begin(), s.end(), tk);
    const std::size_t i = upper == s.begin() ? 0 : static_cast<std::size_t>(upper - s.begin()) - 1;
    std::ptrdiff_t start = static_cast<std::ptrdiff_t>(i) - half;
    start = std::clamp<std::ptrdiff_t>(start, 0, static_cast<std::ptrdiff_t>(n - m));
    const auto s0 = static_cast<std::size_t>(start);
    cplx acc{0.0, 0.0};
    for (std::size_t a = 0; a < m; ++a) {
      double basis = 1.0;
      for (std::size_t b = 0; b < m; ++b) {
        if (b != a) basis *= (tk - s[s0 + b]) / (s[s0 + a] - s[s0 + b]);
      }
      acc += basis * v[s0 + a];
    }
    out[k] = acc;
  }
  if (clipped != nullptr) *clipped = outside;
  return out;
}

ResampleResult resample(const SampledSignal& f, GridPtr target, const Superpotential& W, int order) {
  if (!target) throw Error(ErrorCode::InvalidArgument, "resample needs a target grid");
  const Grid& src = *f.grid();
  const std::vector<double> s = u_coordinates(W, src);
  const std::vector<double> t = u_coordinates(W, *target);
  std::size_t clipped = 0;
  std::vector<cplx> out = interpolate(s, f.values(), t, order, &clipped);

  // Source energy that falls outside the target's u hull.
  const std::vector<double> ew = dw_weights(W, src);
  const double slack = 1e-12 * (s.back() - s.front());
  const double lo = t.front() - slack;
  const double hi = t.back() + slack;
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = std::norm(f[i]) * ew[i];
    total += e;
    if (s[i] < lo || s[i] > hi) outside += e;
  }
  return {SampledSignal(std::move(target), std::move(out)), clipped, total > 0.0 ? outside / total : 0.0};
}

}  // namespace wsp
