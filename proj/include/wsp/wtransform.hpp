// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "wsp/grid.hpp"
#include "wsp/superpotential.hpp"

namespace wsp {

/// Transform values on a uniform p_W axis.
struct Spectrum {
  std::vector<cplx> values;
  GridPtr p_grid;
};

/// Reference transform by direct quadrature, O(N M):
///   F(p_a) = (2 pi)^(-1/2) sum_i w_i W'(x_i) exp(-i p_a W(x_i)) f_i.
/// On a w_domain grid the nodes are u values and the weights are used as is.
Spectrum forward(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid);

struct FastOptions {
  /// Lagrange order of the u-resampling step.
  int order = 7;
  /// Largest tolerated share of dW energy lost to resampling.
  double clip_tolerance = 1e-3;
  /// Cap on the uniform u-grid length.
  std::size_t max_nodes = std::size_t{1} << 20;
};

/// Fast transform: resample f onto a uniform u grid covering its support,
/// then evaluate the sum on the p axis with a chirp-z transform.
///
/// Linear W on a uniform grid needs no resampling and uses the samples
/// directly. Throws ClippingExceeded when the resampling grid had to be
/// cut short and lost more than clip_tolerance of the signal energy.
Spectrum forward_fast(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid,
                      const FastOptions& options = {});

/// f(x_i) = (2 pi)^(-1/2) sum_a w_a exp(+i p_a W(x_i)) F_a.
SampledSignal inverse(const Superpotential& W, const Spectrum& F, const GridPtr& x_grid);

namespace detail {
/// forward() with a configurable kernel sign; sign = +1 is the fault used by
/// the CLI mutation check.
Spectrum forward_with_sign(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid, int sign);
/// forward() evaluated with the serial reference kernel.
Spectrum forward_serial(const Superpotential& W, const SampledSignal& f, const GridPtr& p_grid);
}  // namespace detail

struct Spectrogram {
  std::vector<double> magnitudes;  // rows = centers, row-major
  std::vector<double> centers;
  GridPtr p_axis;

  std::size_t rows() const noexcept { return centers.size(); }
  std::size_t cols() const noexcept { return p_axis ? p_axis->size() : 0; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return magnitudes[r * cols() + c]; }
};

/// Windowed transform. Row r is |forward(f * g_r)| where g_r is the window
/// translated in u so that its dW-centroid sits at W(centers[r]).
///
/// window == nullptr selects the oscillator ground state in u. A sampled
/// window must live on f's grid and have unit dW norm (NotNormalized
/// otherwise); it is translated by order-7 interpolation in u.
Spectrogram windowed(const Superpotential& W, const SampledSignal& f, const SampledSignal* window,
                     std::span<const double> centers, const GridPtr& p_grid);

struct EigenfunctionResult {
  cplx lambda;
  /// ||F - lambda psi_j|| / ||F|| on the p axis.
  double residual = 0.0;
};

inline constexpr int kMaxEigenfunctionIndex = 16;

/// Transforms the j-th oscillator state and fits F = lambda psi_j(p).
EigenfunctionResult eigenfunction_check(const Superpotential& W, int j, const GridPtr& grid, const GridPtr& p_grid);

/// Relative L2 distance ||a - b|| / ||b|| with trapezoid weights of the grid.
double relative_l2(std::span<const cplx> a, std::span<const cplx> b, const Grid& grid);

}  // namespace wsp
