// SPDX-License-Identifier: Apache-2.0
#include "wsp/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wsp {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

void require_x_grid(const Grid& grid) {
  if (grid.rep() != Rep::x_domain) throw Error(ErrorCode::InvalidArgument, "basis state requires an x_domain grid");
}

}  // namespace

std::string_view to_string(BasisFamily f) noexcept {
  switch (f) {
    case BasisFamily::mub_momentum: return "mub_momentum";
    case BasisFamily::mub_chirp: return "mub_chirp";
    case BasisFamily::alpha_state: return "alpha_state";
    case BasisFamily::alpha_dual: return "alpha_dual";
    case BasisFamily::sym_state: return "sym_state";
    case BasisFamily::ho_state: return "ho_state";
  }
  return "unknown";
}

BasisVector mub_momentum_state(const Superpotential& W, const GridPtr& grid, double p) {
  require_x_grid(*grid);
  std::vector<cplx> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = kInvSqrt2Pi * expi(p * W.eval(grid->node(i)));
  return {SampledSignal(grid, std::move(v)), BasisFamily::mub_momentum, p, 0.0, -1};
}

BasisVector mub_chirp_state(const Superpotential& W, const GridPtr& grid, double p) {
  require_x_grid(*grid);
  std::vector<cplx> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double u = W.eval(grid->node(i));
    v[i] = kInvSqrt2Pi * expi(p * u - 0.5 * u * u);
  }
  return {SampledSignal(grid, std::move(v)), BasisFamily::mub_chirp, p, 0.0, -1};
}

BasisVector alpha_eigenstate(const Superpotential& W, const GridPtr& grid, double p, double alpha) {
  require_x_grid(*grid);
  std::vector<cplx> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid->node(i);
    v[i] = std::pow(W.derivative(x), alpha) * kInvSqrt2Pi * expi(p * W.eval(x));
  }
  return {SampledSignal(grid, std::move(v)), BasisFamily::alpha_state, p, alpha, -1};
}

BasisVector alpha_dual(const Superpotential& W, const GridPtr& grid, double p, double alpha) {
  require_x_grid(*grid);
  std::vector<cplx> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid->node(i);
    v[i] = std::pow(W.derivative(x), 1.0 - alpha) * kInvSqrt2Pi * expi(-p * W.eval(x));
  }
  return {SampledSignal(grid, std::move(v)), BasisFamily::alpha_dual, p, alpha, -1};
}

BasisVector sym_eigenstate(const Superpotential& W, const GridPtr& grid, double p) {
  BasisVector b = alpha_eigenstate(W, grid, p, 0.5);
  b.family = BasisFamily::sym_state;
  return b;
}

std::vector<double> hermite_functions(double u, int jmax) {
  if (jmax < 0 || jmax > kMaxHermiteIndex) {
    std::ostringstream os;
    os << "Hermite index " << jmax << " outside [0, " << kMaxHermiteIndex << "]";
    throw Error(ErrorCode::TruncationCap, os.str());
  }
  std::vector<double> psi(static_cast<std::size_t>(jmax) + 1);
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  if (jmax >= 1) psi[1] = std::sqrt(2.0) * u * psi[0];
  for (int j = 1; j < jmax; ++j) {
    const double jj = static_cast<double>(j);
    psi[j + 1] = std::sqrt(2.0 / (jj + 1.0)) * u * psi[j] - std::sqrt(jj / (jj + 1.0)) * psi[j - 1];
  }
  return psi;
}

BasisVector ho_eigenstate(const Superpotential& W, const GridPtr& grid, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "Hermite index must be non-negative");
  if (j > kMaxHermiteIndex) {
    std::ostringstream os;
    os << "Hermite index " << j << " outside [0, " << kMaxHermiteIndex << "]";
    throw Error(ErrorCode::TruncationCap, os.str());
  }
  const std::vector<double> u = u_coordinates(W, *grid);
  std::vector<cplx> v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = hermite_functions(u[i], j)[static_cast<std::size_t>(j)];
  return {SampledSignal(grid, std::move(v)), BasisFamily::ho_state, 0.0, 0.0, j};
}

double Taper::operator()(double u) const noexcept {
  if (u < lo || u > hi) return 0.0;
  const double ramp = 0.5 * ratio * (hi - lo);
  if (ramp <= 0.0) return 1.0;
  if (u < lo + ramp) return 0.5 * (1.0 - std::cos(std::numbers::pi * (u - lo) / ramp));
  if (u > hi - ramp) return 0.5 * (1.0 - std::cos(std::numbers::pi * (hi - u) / ramp));
  return 1.0;
}

double Taper::transform_ratio(double k) const noexcept {
  const double half = 0.5 * (hi - lo);
  const double b = 0.5 * ratio * (hi - lo);
  const double c = half - 0.5 * b;  // mean of the flat and outer half-widths
  const double y = k * b;
  const double kc = k * c;
  const double sinc = kc == 0.0 ? 1.0 : std::sin(kc) / kc;
  double ramp;
  const double z = y / std::numbers::pi;
  if (std::abs(std::abs(z) - 1.0) < 1e-9) {
    ramp = std::numbers::pi / 4.0;  // removable singularity of cos(y/2)/(1 - z^2)
  } else {
    ramp = std::cos(0.5 * y) / (1.0 - z * z);
  }
  return std::abs(sinc * ramp);
}

double Taper::sidelobe_bound(double k) const noexcept {
  const double half = 0.5 * (hi - lo);
  const double b = 0.5 * ratio * (hi - lo);
  const double c = half - 0.5 * b;
  const double ak = std::abs(k);
  const double env = ak * c <= 1.0 ? 1.0 : 1.0 / (ak * c);
  const double y = ak * b;
  const double z = y / std::numbers::pi;
  const double g = y <= std::numbers::pi * std::numbers::sqrt2 ? 1.0 : 1.0 / (z * z - 1.0);
  return env * g;
}

Taper resolved_taper(const Superpotential& W, const Grid& grid, const std::function<double(double)>& freq) {
  const std::vector<double> u = u_coordinates(W, grid);
  const std::vector<double> d = jacobian(W, grid);
  const std::size_t n = u.size();
  const bool x_grid = grid.rep() == Rep::x_domain;
  // Sample spacing around node i in u.
  auto du = [&](std::size_t i) {
    const double h = i + 1 < n ? grid.node(i + 1) - grid.node(i) : grid.node(i) - grid.node(i - 1);
    return x_grid ? d[i] * h : h;
  };
  auto ok = [&](std::size_t i) { return freq(u[i]) * du(i) <= 2.0 * std::numbers::pi / 4.0; };

  std::size_t c = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(u[i]) < std::abs(u[c])) c = i;
  }
  if (!ok(c)) throw Error(ErrorCode::InvalidArgument, "grid does not resolve the integrand near u = 0");
  std::size_t lo = c;
  std::size_t hi = c;
  while (lo > 0 && ok(lo - 1)) --lo;
  while (hi + 1 < n && ok(hi + 1)) ++hi;
  if (hi - lo < 8) throw Error(ErrorCode::InvalidArgument, "resolved range too short for a taper");
  return Taper{u[lo], u[hi], 0.2};
}

BiorthogonalityResult biorthogonality_check(const Superpotential& W, const GridPtr& grid, double alpha,
                                            std::span<const double> p_list, TaperMode mode,
                                            double quadrature_slack) {
  require_x_grid(*grid);
  const std::size_t m = p_list.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty eigenvalue list");
  const std::vector<double> u = u_coordinates(W, *grid);
  const double span = u.back() - u.front();
  const double bin = 2.0 * std::numbers::pi / span;
  double max_dp = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const double dp = std::abs(p_list[a] - p_list[b]);
      if (dp < bin * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "eigenvalues " << p_list[a] << " and " << p_list[b] << " are closer than 2 pi / u-span = " << bin;
        throw Error(ErrorCode::DegenerateEigenvalues, os.str());
      }
      max_dp = std::max(max_dp, dp);
    }
  }

  BiorthogonalityResult r;
  r.size = m;
  std::vector<double> t(u.size(), 1.0);
  if (mode == TaperMode::raised_cosine) {
    r.taper = resolved_taper(W, *grid, [max_dp](double) { return max_dp; });
    for (std::size_t i = 0; i < u.size(); ++i) t[i] = r.taper(u[i]);
  } else {
    r.taper = Taper{u.front(), u.back(), 0.0};
  }

  std::vector<BasisVector> duals;
  std::vector<BasisVector> states;
  for (double p : p_list) {
    duals.push_back(alpha_dual(W, grid, p, alpha));
    states.push_back(alpha_eigenstate(W, grid, p, alpha));
  }
  std::vector<cplx> raw(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      cplx acc{0.0, 0.0};
      const SampledSignal& da = duals[a].signal;
      const SampledSignal& sb = states[b].signal;
      for (std::size_t i = 0; i < u.size(); ++i) acc += grid->weight(i) * t[i] * da[i] * sb[i];
      raw[a * m + b] = acc;
    }
  }
  r.normalized.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      // sqrt of both diagonals keeps the normalized matrix Hermitian.
      const double scale = std::sqrt(std::abs(raw[a * m + a]) * std::abs(raw[b * m + b]));
      r.normalized[a * m + b] = raw[a * m + b] / scale;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const double mag = std::abs(r(a, b));
      r.max_offdiag = std::max(r.max_offdiag, mag);
      if (mode == TaperMode::raised_cosine) {
        const double bound = r.taper.sidelobe_bound(p_list[b] - p_list[a]) + quadrature_slack;
        r.worst_bound_ratio = std::max(r.worst_bound_ratio, mag / bound);
      }
    }
  }
  r.within_bound = r.worst_bound_ratio <= 1.0;
  return r;
}

namespace {

double relative_spread(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double dev = 0.0;
  for (double x : v) dev = std::max(dev, std::abs(x - mean));
  return mean > 0.0 ? dev / mean : 0.0;
}

}  // namespace

UnbiasednessReport unbiasedness_check(const Superpotential& W, const GridPtr& grid) {
  require_x_grid(*grid);
  const std::vector<double> ps{-1.0, 0.0, 1.0};
  const std::vector<double> wd = dw_weights(W, *grid);
  const std::vector<double> u = u_coordinates(W, *grid);

  UnbiasednessReport r;
  // <e_i / sqrt(w_i W'_i) | psi>_dW = psi_i sqrt(w_i W'_i); divide out the
  // position vector's own normalization to compare moduli.
  auto position_spread = [&](auto make) {
    std::vector<double> mags;
    for (double p : ps) {
      const BasisVector b = make(p);
      for (std::size_t i = 0; i < wd.size(); ++i) {
        if (!(wd[i] > 0.0)) continue;
        const double norm = std::sqrt(wd[i]);
        const cplx overlap = b.signal[i] * wd[i] / norm;
        mags.push_back(std::abs(overlap) / norm);
      }
    }
    return relative_spread(mags);
  };
  r.position_momentum = position_spread([&](double p) { return mub_momentum_state(W, grid, p); });
  r.position_chirp = position_spread([&](double p) { return mub_chirp_state(W, grid, p); });

  const double max_dq = ps.back() - ps.front();
  const Taper taper = resolved_taper(W, *grid, [max_dq](double v) { return std::abs(v) + max_dq; });
  std::vector<double> tw(wd.size());
  for (std::size_t i = 0; i < wd.size(); ++i) tw[i] = wd[i] * taper(u[i]);
  std::vector<double> mags;
  for (double p : ps) {
    const BasisVector mom = mub_momentum_state(W, grid, p);
    for (double q : ps) {
      const BasisVector ch = mub_chirp_state(W, grid, q);
      cplx acc{0.0, 0.0};
      for (std::size_t i = 0; i < tw.size(); ++i) acc += tw[i] * std::conj(mom.signal[i]) * ch.signal[i];
      mags.push_back(std::abs(acc));
    }
  }
  r.momentum_chirp = relative_spread(mags);
  r.max = std::max({r.position_momentum, r.position_chirp, r.momentum_chirp});
  return r;
}

}  // namespace wsp
