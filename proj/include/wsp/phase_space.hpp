// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "wsp/grid.hpp"
#include "wsp/superpotential.hpp"
#include "wsp/wtransform.hpp"

namespace wsp {

inline constexpr int kMaxFockIndex = 64;

/// Coefficients c_0 .. c_jmax over the oscillator states psi_j(W(x)).
class FockVector {
 public:
  /// Zero vector.
  explicit FockVector(int jmax);
  explicit FockVector(std::vector<cplx> coeffs);
  static FockVector basis(int j, int jmax);

  int jmax() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return c_; }
  cplx& operator[](std::size_t j) noexcept { return c_[j]; }
  const cplx& operator[](std::size_t j) const noexcept { return c_[j]; }
  double norm_squared() const noexcept;

 private:
  std::vector<cplx> c_;
};

cplx inner(const FockVector& a, const FockVector& b);

enum class Ladder { lower, raise };

/// lower: c_j <- sqrt(j+1) c_{j+1}; raise: c_j <- sqrt(j) c_{j-1}.
/// Raising throws TruncationOverflow if c_jmax is not (numerically) zero.
FockVector ladder_apply(Ladder direction, const FockVector& v);

/// c_j <- (j + 1/2) c_j.
FockVector hamiltonian_apply(const FockVector& v);

struct CoherentState {
  FockVector state;
  /// Poisson weight beyond jmax, summed term by term.
  double tail = 0.0;
  /// ||a|z> - z|z>||.
  double eigen_residual = 0.0;
};

inline constexpr double kMaxCoherentAmplitude = 4.0;
inline constexpr double kCoherentTailLimit = 1e-10;

/// c_j = exp(-|z|^2/2) z^j / sqrt(j!), not renormalized after truncation.
CoherentState coherent_state(cplx z, int jmax);

/// sum_j c_j psi_j(W(x_i)).
SampledSignal fock_to_signal(const Superpotential& W, const FockVector& v, const GridPtr& grid);

struct WignerGrid {
  std::vector<double> values;  // rows = u nodes, row-major
  GridPtr u_axis;
  GridPtr p_axis;
  /// max |Im| / max |Re| of the raw sums.
  double imag_residue = 0.0;

  double operator()(std::size_t k, std::size_t a) const noexcept { return values[k * p_axis->size() + a]; }
};

/// W(u, p) = (1/pi) sum_y dy conj(g(u+y)) g(u-y) exp(2ipy) for g on a
/// uniform w_domain grid.
WignerGrid wigner(const SampledSignal& g, const GridPtr& p_axis);

/// Same sum with the serial reference kernel.
WignerGrid wigner_reference(const SampledSignal& g, const GridPtr& p_axis);

struct UncertaintyResult {
  double delta_w = 0.0;
  double delta_p = 0.0;
  double product = 0.0;
};

/// Delta W from dW moments of |f|^2, Delta p from the moments of |forward(f)|^2
/// on p_grid. f must have unit dW norm (NotNormalized otherwise).
UncertaintyResult uncertainty_product(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid);

/// As uncertainty_product with the transform of f supplied by the caller.
UncertaintyResult uncertainty_from_spectrum(const Superpotential& W, const SampledSignal& f, const Spectrum& F);

}  // namespace wsp
