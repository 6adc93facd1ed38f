// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "wsp/grid.hpp"
#include "wsp/superpotential.hpp"

namespace wsp {

inline constexpr int kMaxHermiteIndex = 64;

enum class BasisFamily { mub_momentum, mub_chirp, alpha_state, alpha_dual, sym_state, ho_state };

std::string_view to_string(BasisFamily f) noexcept;

struct BasisVector {
  SampledSignal signal;
  BasisFamily family;
  double p = 0.0;
  double alpha = 0.0;
  int j = -1;
};

/// e^{i p W} / sqrt(2 pi).
BasisVector mub_momentum_state(const Superpotential& W, const GridPtr& grid, double p);

/// e^{i p W - i W^2 / 2} / sqrt(2 pi).
BasisVector mub_chirp_state(const Superpotential& W, const GridPtr& grid, double p);

/// W'^alpha e^{i p W} / sqrt(2 pi).
BasisVector alpha_eigenstate(const Superpotential& W, const GridPtr& grid, double p, double alpha);

/// Bra values of the dual: W'^(1-alpha) e^{-i p W} / sqrt(2 pi).
BasisVector alpha_dual(const Superpotential& W, const GridPtr& grid, double p, double alpha);

/// The alpha = 1/2 eigenstate.
BasisVector sym_eigenstate(const Superpotential& W, const GridPtr& grid, double p);

/// Normalized Hermite function of u = W(x), orthonormal under dW.
BasisVector ho_eigenstate(const Superpotential& W, const GridPtr& grid, int j);

/// psi_0(u) .. psi_jmax(u) by the stable normalized recurrence.
std::vector<double> hermite_functions(double u, int jmax);

/// Raised-cosine (Tukey) taper in u: flat in the middle, cosine ramps over
/// ratio/2 of the range at each end, zero outside [lo, hi].
struct Taper {
  double lo = 0.0;
  double hi = 0.0;
  double ratio = 0.2;

  double operator()(double u) const noexcept;
  /// |FT(taper)(k)| / FT(taper)(0) in closed form.
  double transform_ratio(double k) const noexcept;
  /// Envelope that dominates transform_ratio for every k.
  double sidelobe_bound(double k) const noexcept;
};

/// Taper over the widest run of nodes around u = 0 where an integrand of
/// local u-frequency freq(u) gets at least four samples per period.
Taper resolved_taper(const Superpotential& W, const Grid& grid, const std::function<double(double)>& freq);

enum class TaperMode { none, raised_cosine };

struct BiorthogonalityResult {
  /// Row-major overlaps <dual(p_a)| T |state(p_b)>, divided by the diagonal.
  std::vector<cplx> normalized;
  std::size_t size = 0;
  double max_offdiag = 0.0;
  /// Largest ratio |M_ab| / bound_ab over the off-diagonal (0 without a taper).
  double worst_bound_ratio = 0.0;
  bool within_bound = true;
  Taper taper;

  cplx operator()(std::size_t a, std::size_t b) const noexcept { return normalized[a * size + b]; }
};

/// Tapered biorthogonality overlaps under dx. Off-diagonal magnitudes are
/// checked against the taper's sidelobe envelope plus quadrature_slack.
BiorthogonalityResult biorthogonality_check(const Superpotential& W, const GridPtr& grid, double alpha,
                                            std::span<const double> p_list,
                                            TaperMode mode = TaperMode::raised_cosine,
                                            double quadrature_slack = 1e-8);

struct UnbiasednessReport {
  double position_momentum = 0.0;
  double position_chirp = 0.0;
  double momentum_chirp = 0.0;
  double max = 0.0;
};

/// Relative spread of overlap moduli for the three basis pairings, with
/// p, q in {-1, 0, 1}. Position vectors are e_i / sqrt(w_i W'_i); the
/// momentum-chirp overlaps are tapered.
UnbiasednessReport unbiasedness_check(const Superpotential& W, const GridPtr& grid);

}  // namespace wsp
