// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "wsp/dense_matrix.hpp"
#include "wsp/grid.hpp"
#include "wsp/superpotential.hpp"

namespace wsp {

/// Smallest W'(x_i) accepted where an operator needs a negative power of W'.
inline constexpr double kSingularityFloor = 1e-10;

enum class OperatorKind {
  position,
  momentum_alpha,
  momentum_symmetrized,
  momentum_w,
  similarity,
};

std::string_view to_string(OperatorKind k) noexcept;

/// Dense discretized operator tied to its grid.
struct OperatorMatrix {
  DenseMatrix entries;
  GridPtr grid;
  Measure measure = Measure::dx;
  OperatorKind kind = OperatorKind::position;
  double alpha = 0.0;
};

/// First-derivative matrix: central differences inside, second-order
/// one-sided stencils on the two boundary rows.
DenseMatrix difference_matrix(const Grid& grid);

/// diag(W(x_i)), or diag(u_i) on a w_domain grid.
OperatorMatrix build_position(const Superpotential& W, const GridPtr& grid);

/// -i diag(W'^(alpha-1)) D diag(W'^(-alpha)) on an x grid.
OperatorMatrix build_momentum_alpha(const Superpotential& W, const GridPtr& grid, double alpha);

/// The symmetrized momentum -(i/2)(A D + D A) with A = diag(1/W').
///
/// This is the half-sum of the alpha = 0 and alpha = 1 orderings, the reduced
/// form that every ordering average collapses to in the continuum. It is
/// Hermitian and identical for every alpha; alpha is recorded only.
OperatorMatrix build_momentum_symmetrized(const Superpotential& W, const GridPtr& grid, double alpha);

/// (P_alpha + P_{1-alpha}) / 2 taken literally on the grid. Hermitian, and
/// equal to the symmetrized form up to O(h^2).
OperatorMatrix build_momentum_ordered_average(const Superpotential& W, const GridPtr& grid, double alpha);

/// -i A D + (i/2) diag(W''/W'^2): the symmetrized operator written with the
/// derivative moved to the right. Agrees with the symmetrized form up to O(h^2).
OperatorMatrix build_momentum_symmetrized_analytic(const Superpotential& W, const GridPtr& grid);

/// -i d/du on a uniform w_domain grid.
OperatorMatrix build_momentum_w(const GridPtr& grid);

/// S = diag(W'^(-alpha)).
OperatorMatrix build_similarity(const Superpotential& W, const GridPtr& grid, double alpha);

enum class AdjointClass { self_adjoint_dx, self_adjoint_dW, self_adjoint_both, neither, indeterminate };

std::string_view to_string(AdjointClass c) noexcept;

/// Relative thresholds used by the classification.
inline constexpr double kSelfAdjointTol = 1e-8;
inline constexpr double kBoundedAwayTol = 1e-3;

struct AdjointReport {
  double defect_dx = 0.0;
  double defect_dW = 0.0;
  /// Operator norm of the interior block of P.
  double norm = 0.0;
  std::size_t interior_rows = 0;
  AdjointClass classification = AdjointClass::indeterminate;
};

/// ||P - P^H|| and ||P - M^-1 P^H M||, M = diag(W' w), on the interior block.
///
/// A defect at most kSelfAdjointTol * ||P|| counts as self-adjoint for that
/// measure; one at least kBoundedAwayTol * ||P|| counts as not. Anything in
/// between is indeterminate.
AdjointReport adjoint_report(const OperatorMatrix& P, const Superpotential& W);

/// ||([W, P] - i) f|| / ||f|| restricted to interior nodes (plain l2).
double commutator_defect(const Superpotential& W, const OperatorMatrix& P, const SampledSignal& f);

struct SimilarityResult {
  double residual = 0.0;
  double reference_norm = 0.0;  // ||P_0|| on the interior block
};

/// ||S P_alpha S^-1 - P_0|| on the interior block.
SimilarityResult similarity_check(const Superpotential& W, const GridPtr& grid, double alpha);

}  // namespace wsp
