// SPDX-License-Identifier: Apache-2.0
#include "wsp/wtransform.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "wsp/bases.hpp"
#include "wsp/chirpz.hpp"
#include "wsp/kernels.hpp"

namespace wsp {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

std::vector<cplx> dw_weighted(const Superpotential& W, const SampledSignal& f) {
  const std::vector<double> wd = dw_weights(W, *f.grid());
  std::vector<cplx> out(wd.size());
  for (std::size_t i = 0; i < wd.size(); ++i) out[i] = wd[i] * f[i];
  return out;
}

void require_uniform_axis(const Grid& p) {
  p.spacing();  // NonUniformGrid otherwise
}

}  // namespace

namespace detail {

Spectrum forward_with_sign(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid, int sign) {
  const std::vector<double> u = u_coordinates(W, *f.grid());
  const std::vector<cplx> weighted = dw_weighted(W, f);
  return {kernels::omp::direct_sum(u, weighted, p_grid->nodes(), sign, kInvSqrt2Pi), p_grid};
}

Spectrum forward_serial(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid) {
  const std::vector<double> u = u_coordinates(W, *f.grid());
  const std::vector<cplx> weighted = dw_weighted(W, f);
  return {kernels::serial::direct_sum(u, weighted, p_grid->nodes(), -1, kInvSqrt2Pi), p_grid};
}

}  // namespace detail

Spectrum forward(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid) {
  return detail::forward_with_sign(W, f, p_grid, -1);
}

Spectrum forward_fast(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid,
                      const FastOptions& options) {
  require_uniform_axis(*p_grid);
  const Grid& src = *f.grid();
  const double p0 = p_grid->front();
  const double dp = p_grid->spacing();
  const std::size_t m = p_grid->size();

  const bool u_uniform = src.is_uniform() && (src.rep() == Rep::w_domain || W.is_linear());
  if (u_uniform) {
    const std::vector<double> u = u_coordinates(W, src);
    const double du = (u.back() - u.front()) / static_cast<double>(u.size() - 1);
    std::vector<cplx> out = chirp_z(dw_weighted(W, f), u.front(), du, p0, dp, m, -1);
    for (cplx& v : out) v *= kInvSqrt2Pi;
    return {std::move(out), p_grid};
  }

  const std::vector<double> u = u_coordinates(W, src);
  const std::vector<double> wd = dw_weights(W, src);
  const std::size_t n = u.size();
  std::vector<double> energy(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    energy[i] = std::norm(f[i]) * wd[i];
    total += energy[i];
  }
  if (total == 0.0) return {std::vector<cplx>(m), p_grid};

  // Support: drop outer nodes carrying less than 1e-16 of the energy from
  // either side (summed separately so the right end does not round to total).
  const double cut = 1e-16 * total;
  std::size_t i0 = 0;
  for (double acc = 0.0; i0 < n; ++i0) {
    acc += energy[i0];
    if (acc > cut) break;
  }
  std::size_t i1 = n - 1;
  for (double acc = 0.0; i1 > 0; --i1) {
    acc += energy[i1];
    if (acc > cut) break;
  }
  i0 = i0 >= 2 ? i0 - 2 : 0;
  i1 = std::min(i1 + 2, n - 1);
  if (i1 < i0 + 2) {
    i0 = i0 > 0 ? i0 - 1 : 0;
    i1 = std::min(i0 + 2, n - 1);
  }

  std::vector<double> gaps;
  for (std::size_t i = i0; i < i1; ++i) gaps.push_back(u[i + 1] - u[i]);
  std::nth_element(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2), gaps.end());
  const double du = gaps[gaps.size() / 2];

  double lo = u[i0];
  double hi = u[i1];
  std::size_t k = static_cast<std::size_t>(std::ceil((hi - lo) / du)) + 1;
  if (k > options.max_nodes) {
    // Keep the window of allowed length around the energy centroid.
    double centroid = 0.0;
    for (std::size_t i = 0; i < n; ++i) centroid += energy[i] * u[i];
    centroid /= total;
    const double width = du * static_cast<double>(options.max_nodes - 1);
    lo = std::clamp(centroid - 0.5 * width, u[i0], u[i1] - width);
    hi = lo + width;
    k = options.max_nodes;
  }
  k = std::max<std::size_t>(k, kMinNodes);

  const GridPtr ugrid = uniform_u_grid(lo, hi, k);
  const ResampleResult rs = resample(f, ugrid, W, options.order);
  if (rs.clipped_energy_fraction > options.clip_tolerance) {
    std::ostringstream os;
    os << "resampling dropped " << rs.clipped_energy_fraction << " of the signal energy (limit "
       << options.clip_tolerance << ")";
    throw Error(ErrorCode::ClippingExceeded, os.str());
  }
  std::vector<cplx> weighted(k);
  for (std::size_t i = 0; i < k; ++i) weighted[i] = ugrid->weight(i) * rs.signal[i];
  const double step = (hi - lo) / static_cast<double>(k - 1);
  std::vector<cplx> out = chirp_z(weighted, lo, step, p0, dp, m, -1);
  for (cplx& v : out) v *= kInvSqrt2Pi;
  return {std::move(out), p_grid};
}

SampledSignal inverse(const Superpotential& W, const Spectrum& F, const GridPtr& x_grid) {
  if (F.values.size() != F.p_grid->size()) throw Error(ErrorCode::GridMismatch, "spectrum length does not match its axis");
  require_uniform_axis(*F.p_grid);
  const std::vector<double> u = u_coordinates(W, *x_grid);
  std::vector<cplx> weighted(F.values.size());
  for (std::size_t a = 0; a < weighted.size(); ++a) weighted[a] = F.p_grid->weight(a) * F.values[a];
  // Same kernel with the roles of u and p swapped.
  return SampledSignal(x_grid, kernels::omp::direct_sum(F.p_grid->nodes(), weighted, u, +1, kInvSqrt2Pi));
}

Spectrogram windowed(const Superpotential& W, const SampledSignal& f, const SampledSignal* window,
                     std::span<const double> centers, const GridPtr& p_grid) {
  const Grid& grid = *f.grid();
  const std::vector<double> u = u_coordinates(W, grid);
  const std::vector<double> wd = dw_weights(W, grid);
  for (double c : centers) {
    const double wc = grid.rep() == Rep::x_domain ? c : W.eval(c);
    const double lo = grid.rep() == Rep::x_domain ? grid.front() : u.front();
    const double hi = grid.rep() == Rep::x_domain ? grid.back() : u.back();
    if (!std::isfinite(c) || wc < lo || wc > hi) {
      std::ostringstream os;
      os << "window center " << c << " lies outside the grid";
      throw Error(ErrorCode::CenterOutOfRange, os.str());
    }
  }

  double window_center = 0.0;
  if (window != nullptr) {
    if (!same_grid(*window->grid(), grid)) throw Error(ErrorCode::GridMismatch, "window and signal grids differ");
    double mass = 0.0;
    double first = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double e = std::norm((*window)[i]) * wd[i];
      mass += e;
      first += e * u[i];
    }
    if (std::abs(mass - 1.0) > 1e-6) {
      std::ostringstream os;
      os << "window has dW norm^2 " << mass << ", expected 1";
      throw Error(ErrorCode::NotNormalized, os.str());
    }
    window_center = first / mass;
  }

  Spectrogram s;
  s.centers.assign(centers.begin(), centers.end());
  s.p_axis = p_grid;
  s.magnitudes.assign(centers.size() * p_grid->size(), 0.0);
  const std::size_t cols = p_grid->size();

  std::exception_ptr failure;
  const auto rows = static_cast<std::ptrdiff_t>(centers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    try {
      const double shift = W.eval(centers[r]) - window_center;
      std::vector<cplx> g;
      if (window == nullptr) {
        g.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = hermite_functions(u[i] - shift, 0)[0];
      } else {
        std::vector<double> t(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) t[i] = u[i] - shift;
        g = interpolate(u, window->values(), t, 7);
      }
      std::vector<cplx> prod(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) prod[i] = wd[i] * f[i] * g[i];
      const std::vector<cplx> row = kernels::serial::direct_sum(u, prod, p_grid->nodes(), -1, kInvSqrt2Pi);
      for (std::size_t a = 0; a < cols; ++a) s.magnitudes[static_cast<std::size_t>(r) * cols + a] = std::abs(row[a]);
    } catch (...) {
#pragma omp critical(wsp_windowed_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return s;
}

double relative_l2(std::span<const cplx> a, std::span<const cplx> b, const Grid& grid) {
  if (a.size() != b.size() || a.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "length mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += grid.weight(i) * std::norm(a[i] - b[i]);
    den += grid.weight(i) * std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

EigenfunctionResult eigenfunction_check(const Superpotential& W, int j, const GridPtr& grid, const GridPtr& p_grid) {
  if (j < 0 || j > kMaxEigenfunctionIndex) {
    std::ostringstream os;
    os << "eigenfunction index " << j << " outside [0, " << kMaxEigenfunctionIndex << "]";
    throw Error(ErrorCode::TruncationCap, os.str());
  }
  const BasisVector psi = ho_eigenstate(W, grid, j);
  const Spectrum F = forward(W, psi.signal, p_grid);
  const std::size_t m = p_grid->size();
  std::vector<cplx> target(m);
  for (std::size_t a = 0; a < m; ++a) target[a] = hermite_functions(p_grid->node(a), j)[static_cast<std::size_t>(j)];

  cplx num{0.0, 0.0};
  double den = 0.0;
  double fnorm = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    const double w = p_grid->weight(a);
    num += w * std::conj(target[a]) * F.values[a];
    den += w * std::norm(target[a]);
    fnorm += w * std::norm(F.values[a]);
  }
  EigenfunctionResult r;
  r.lambda = num / den;
  double res = 0.0;
  for (std::size_t a = 0; a < m; ++a) res += p_grid->weight(a) * std::norm(F.values[a] - r.lambda * target[a]);
  r.residual = fnorm > 0.0 ? std::sqrt(res / fnorm) : 0.0;
  return r;
}

}  // namespace wsp
