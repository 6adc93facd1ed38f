// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "wsp/superpotential.hpp"

namespace wsp {

using cplx = std::complex<double>;

/// Whether grid nodes are x values or values of the generalized coordinate u = W(x).
enum class Rep { x_domain, w_domain };

enum class Measure { dx, dW };

inline constexpr std::size_t kMinNodes = 3;

/// Strictly increasing sample nodes with positive quadrature weights.
class Grid {
 public:
  /// Validates ordering, positivity and sum(weights) == span (1e-10 relative).
  Grid(std::vector<double> nodes, std::vector<double> weights, Rep rep);

  /// Trapezoid weights on arbitrary (possibly non-uniform) increasing nodes.
  static Grid trapezoid(std::vector<double> nodes, Rep rep);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double node(std::size_t i) const noexcept { return nodes_[i]; }
  double weight(std::size_t i) const noexcept { return weights_[i]; }
  Rep rep() const noexcept { return rep_; }
  double front() const noexcept { return nodes_.front(); }
  double back() const noexcept { return nodes_.back(); }

  bool is_uniform(double rel_tol = 1e-9) const noexcept;
  /// Node spacing; throws NonUniformGrid unless is_uniform().
  double spacing() const;

  bool same_as(const Grid& other) const noexcept;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  Rep rep_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// N equally spaced x nodes on [xmin, xmax] with trapezoid weights.
GridPtr uniform_x_grid(double xmin, double xmax, std::size_t n);

/// N nodes uniform in u = W(x) on [wmin, wmax]; node values are u values.
GridPtr uniform_w_grid(const Superpotential& W, double wmin, double wmax, std::size_t n);

/// N nodes uniform in u on [umin, umax] (w_domain), no superpotential needed.
GridPtr uniform_u_grid(double umin, double umax, std::size_t n);

/// Uniform axis for the conjugate momentum p_W (tagged w_domain).
GridPtr uniform_p_grid(double pmin, double pmax, std::size_t n);

/// x value of every node (through W^{-1} on a w_domain grid).
std::vector<double> x_images(const Superpotential& W, const Grid& grid);

/// u = W(x) of every node (the node itself on a w_domain grid).
std::vector<double> u_coordinates(const Superpotential& W, const Grid& grid);

/// W'(x) at every node's x image.
std::vector<double> jacobian(const Superpotential& W, const Grid& grid);

/// Quadrature weights of the dW measure: w_i W'(x_i) on an x grid, w_i on a w grid.
std::vector<double> dw_weights(const Superpotential& W, const Grid& grid);

/// Complex samples bound to a grid. Values are finite and match the grid length.
class SampledSignal {
 public:
  SampledSignal(GridPtr grid, std::vector<cplx> values);
  static SampledSignal zeros(GridPtr grid);

  const GridPtr& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::vector<cplx>& mutable_values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  GridPtr grid_;
  std::vector<cplx> values_;
};

bool same_grid(const Grid& a, const Grid& b) noexcept;

/// sum conj(f_i) g_i w_i under dx, with the extra W'(x_i) factor under dW on
/// an x grid (and the inverse factor for dx on a w grid). W is required
/// whenever the measure differs from the grid's native one.
cplx inner_product(const SampledSignal& f, const SampledSignal& g, Measure measure,
                   const Superpotential* W = nullptr);

/// ||f||^2 under the given measure.
double norm_squared(const SampledSignal& f, Measure measure, const Superpotential* W = nullptr);

struct ResampleResult {
  SampledSignal signal;
  std::size_t clipped_nodes = 0;
  /// Share of the source's dW energy lying outside the target's u hull.
  double clipped_energy_fraction = 0.0;
};

/// Local polynomial interpolation in the u = W(x) coordinate.
///
/// Source and target nodes are both mapped to u (through W for x grids), then
/// each target value is interpolated from the order + 1 nearest source nodes.
/// Targets outside the source hull are set to zero and counted. Supported
/// orders: 1, 3, 5, 7.
ResampleResult resample(const SampledSignal& f, GridPtr target, const Superpotential& W, int order);

/// Lagrange interpolation of samples v at increasing abscissae s onto
/// arbitrary targets t. Targets outside [s.front(), s.back()] give 0 and are
/// counted in *clipped when it is non-null.
std::vector<cplx> interpolate(std::span<const double> s, std::span<const cplx> v, std::span<const double> t,
                              int order, std::size_t* clipped = nullptr);

}  // namespace wsp
