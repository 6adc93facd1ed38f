// SPDX-License-Identifier: Apache-2.0
#include "wsp/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wsp/bases.hpp"
#include "wsp/kernels.hpp"

namespace wsp {

namespace {

void check_jmax(int jmax) {
  if (jmax < 0 || jmax > kMaxFockIndex) {
    std::ostringstream os;
    os << "Fock truncation " << jmax << " outside [0, " << kMaxFockIndex << "]";
    throw Error(ErrorCode::TruncationCap, os.str());
  }
}

}  // namespace

FockVector::FockVector(int jmax) {
  check_jmax(jmax);
  c_.assign(static_cast<std::size_t>(jmax) + 1, cplx{});
}

FockVector::FockVector(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "empty Fock vector");
  check_jmax(static_cast<int>(c_.size()) - 1);
}

FockVector FockVector::basis(int j, int jmax) {
  FockVector v(jmax);
  if (j < 0 || j > jmax) throw Error(ErrorCode::InvalidArgument, "basis index outside the truncation");
  v[static_cast<std::size_t>(j)] = 1.0;
  return v;
}

double FockVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const cplx& c : c_) s += std::norm(c);
  return s;
}

cplx inner(const FockVector& a, const FockVector& b) {
  if (a.jmax() != b.jmax()) throw Error(ErrorCode::InvalidArgument, "Fock truncations differ");
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) s += std::conj(a[j]) * b[j];
  return s;
}

FockVector ladder_apply(Ladder direction, const FockVector& v) {
  const int n = v.jmax();
  FockVector out(n);
  if (direction == Ladder::lower) {
    for (int j = 0; j < n; ++j) out[j] = std::sqrt(static_cast<double>(j + 1)) * v[j + 1];
    return out;
  }
  if (std::abs(v[static_cast<std::size_t>(n)]) > 1e-15) {
    throw Error(ErrorCode::TruncationOverflow, "raising a vector with weight at the truncation index");
  }
  for (int j = 1; j <= n; ++j) out[j] = std::sqrt(static_cast<double>(j)) * v[j - 1];
  return out;
}

FockVector hamiltonian_apply(const FockVector& v) {
  FockVector out(v.jmax());
  for (int j = 0; j <= v.jmax(); ++j) out[j] = (static_cast<double>(j) + 0.5) * v[j];
  return out;
}

CoherentState coherent_state(cplx z, int jmax) {
  check_jmax(jmax);
  const double r = std::abs(z);
  if (!std::isfinite(r) || r > kMaxCoherentAmplitude) {
    std::ostringstream os;
    os << "|z| = " << r << " exceeds " << kMaxCoherentAmplitude;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  FockVector v(jmax);
  cplx c = std::exp(-0.5 * r * r);
  v[0] = c;
  for (int j = 1; j <= jmax; ++j) {
    c *= z / std::sqrt(static_cast<double>(j));
    v[j] = c;
  }

  // Poisson weights |c_j|^2 beyond the truncation.
  double term = std::norm(c);
  double tail = 0.0;
  for (int j = jmax + 1; j < jmax + 2000; ++j) {
    term *= r * r / static_cast<double>(j);
    tail += term;
    if (term < 1e-30 * std::max(tail, 1e-300)) break;
    if (term == 0.0) break;
  }
  if (tail > kCoherentTailLimit) {
    std::ostringstream os;
    os << "truncated tail weight " << tail << " exceeds " << kCoherentTailLimit;
    throw Error(ErrorCode::TailTooLarge, os.str());
  }

  CoherentState s{v, tail, 0.0};
  const FockVector a = ladder_apply(Ladder::lower, v);
  double res = 0.0;
  for (int j = 0; j <= jmax; ++j) res += std::norm(a[j] - z * v[j]);
  s.eigen_residual = std::sqrt(res);
  return s;
}

SampledSignal fock_to_signal(const Superpotential& W, const FockVector& v, const GridPtr& grid) {
  const std::vector<double> u = u_coordinates(W, *grid);
  std::vector<cplx> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::vector<double> psi = hermite_functions(u[i], v.jmax());
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < psi.size(); ++j) acc += v[j] * psi[j];
    out[i] = acc;
  }
  return SampledSignal(grid, std::move(out));
}

namespace {

template <class Kernel>
WignerGrid wigner_with(const SampledSignal& g, const GridPtr& p_axis, Kernel kernel) {
  const Grid& grid = *g.grid();
  if (grid.rep() != Rep::w_domain) throw Error(ErrorCode::InvalidArgument, "Wigner input must be sampled in u");
  const double h = grid.spacing();
  const std::vector<cplx> raw = kernel(g.values(), h, p_axis->nodes());
  WignerGrid w;
  w.u_axis = g.grid();
  w.p_axis = p_axis;
  w.values.resize(raw.size());
  double max_re = 0.0;
  double max_im = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    w.values[i] = raw[i].real();
    max_re = std::max(max_re, std::abs(raw[i].real()));
    max_im = std::max(max_im, std::abs(raw[i].imag()));
  }
  w.imag_residue = max_re > 0.0 ? max_im / max_re : max_im;
  return w;
}

}  // namespace

WignerGrid wigner(const SampledSignal& g, const GridPtr& p_axis) {
  return wigner_with(g, p_axis, [](auto v, double h, auto p) { return kernels::omp::wigner(v, h, p); });
}

WignerGrid wigner_reference(const SampledSignal& g, const GridPtr& p_axis) {
  return wigner_with(g, p_axis, [](auto v, double h, auto p) { return kernels::serial::wigner(v, h, p); });
}

UncertaintyResult uncertainty_product(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid) {
  return uncertainty_from_spectrum(W, f, forward(W, f, p_grid));
}

UncertaintyResult uncertainty_from_spectrum(const Superpotential& W, const SampledSignal& f, const Spectrum& F) {
  const GridPtr& p_grid = F.p_grid;
  const std::vector<double> u = u_coordinates(W, *f.grid());
  const std::vector<double> wd = dw_weights(W, *f.grid());
  double m0 = 0.0;
  double m1 = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double e = std::norm(f[i]) * wd[i];
    m0 += e;
    m1 += e * u[i];
  }
  if (std::abs(m0 - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "signal has dW norm^2 " << m0 << ", expected 1";
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  const double mean_u = m1 / m0;
  double var_u = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) var_u += std::norm(f[i]) * wd[i] * (u[i] - mean_u) * (u[i] - mean_u);
  var_u /= m0;

  double q0 = 0.0;
  double q1 = 0.0;
  for (std::size_t a = 0; a < F.values.size(); ++a) {
    const double e = std::norm(F.values[a]) * p_grid->weight(a);
    q0 += e;
    q1 += e * p_grid->node(a);
  }
  const double mean_p = q1 / q0;
  double var_p = 0.0;
  for (std::size_t a = 0; a < F.values.size(); ++a) {
    const double d = p_grid->node(a) - mean_p;
    var_p += std::norm(F.values[a]) * p_grid->weight(a) * d * d;
  }
  var_p /= q0;

  UncertaintyResult r;
  r.delta_w = std::sqrt(var_u);
  r.delta_p = std::sqrt(var_p);
  r.product = r.delta_w * r.delta_p;
  return r;
}

}  // namespace wsp
