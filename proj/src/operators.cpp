// SPDX-License-Identifier: Apache-2.0
#include "wsp/operators.hpp"

#include <cmath>
#include <sstream>

#include "wsp/kernels.hpp"

namespace wsp {

std::string_view to_string(OperatorKind k) noexcept {
  switch (k) {
    case OperatorKind::position: return "position";
    case OperatorKind::momentum_alpha: return "momentum_alpha";
    case OperatorKind::momentum_symmetrized: return "momentum_symmetrized";
    case OperatorKind::momentum_w: return "momentum_w";
    case OperatorKind::similarity: return "similarity";
  }
  return "unknown";
}

std::string_view to_string(AdjointClass c) noexcept {
  switch (c) {
    case AdjointClass::self_adjoint_dx: return "self_adjoint_dx";
    case AdjointClass::self_adjoint_dW: return "self_adjoint_dW";
    case AdjointClass::self_adjoint_both: return "self_adjoint_both";
    case AdjointClass::neither: return "neither";
    case AdjointClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

DenseMatrix difference_matrix(const Grid& grid) {
  const std::size_t n = grid.size();
  const auto x = grid.nodes();
  DenseMatrix d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double span = x[i + 1] - x[i - 1];
    d(i, i - 1) = -1.0 / span;
    d(i, i + 1) = 1.0 / span;
  }
  // On a uniform grid these reduce to (-3, 4, -1)/2h and (1, -4, 3)/2h.
  const double h0 = x[1] - x[0];
  const double h1 = x[2] - x[1];
  d(0, 0) = -(2.0 * h0 + h1) / (h0 * (h0 + h1));
  d(0, 1) = (h0 + h1) / (h0 * h1);
  d(0, 2) = -h0 / (h1 * (h0 + h1));
  const double g0 = x[n - 1] - x[n - 2];
  const double g1 = x[n - 2] - x[n - 3];
  d(n - 1, n - 1) = (2.0 * g0 + g1) / (g0 * (g0 + g1));
  d(n - 1, n - 2) = -(g0 + g1) / (g0 * g1);
  d(n - 1, n - 3) = g0 / (g1 * (g0 + g1));
  return d;
}

namespace {

void require_x_grid(const Grid& grid) {
  if (grid.rep() != Rep::x_domain) throw Error(ErrorCode::InvalidArgument, "operator requires an x_domain grid");
}

// W'(x_i), after checking that negative powers of it are usable.
std::vector<double> safe_jacobian(const Superpotential& W, const Grid& grid) {
  require_x_grid(grid);
  std::vector<double> d = jacobian(W, grid);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > kSingularityFloor)) {
      std::ostringstream os;
      os << "W'(" << grid.node(i) << ") = " << d[i] << " is below the floor " << kSingularityFloor;
      throw Error(ErrorCode::SingularJacobian, os.str());
    }
  }
  for (double c : W.monotonicity().critical_points) {
    if (c > grid.front() && c < grid.back()) {
      std::ostringstream os;
      os << "W has a critical point at x = " << c << " inside the grid";
      throw Error(ErrorCode::NonMonotone, os.str());
    }
  }
  return d;
}

std::vector<double> powers(std::span<const double> d, double e) {
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = std::pow(d[i], e);
  return out;
}

const cplx kMinusI{0.0, -1.0};

}  // namespace

OperatorMatrix build_position(const Superpotential& W, const GridPtr& grid) {
  const std::vector<double> u = u_coordinates(W, *grid);
  const Measure m = grid->rep() == Rep::x_domain ? Measure::dx : Measure::dW;
  return {DenseMatrix::diagonal(u), grid, m, OperatorKind::position, 0.0};
}

OperatorMatrix build_momentum_alpha(const Superpotential& W, const GridPtr& grid, double alpha) {
  const std::vector<double> d = safe_jacobian(W, *grid);
  const DenseMatrix D = difference_matrix(*grid);
  const std::vector<double> left = powers(d, alpha - 1.0);
  const std::vector<double> right = powers(d, -alpha);
  const Measure m = alpha == 0.0 ? Measure::dW : Measure::dx;
  return {kMinusI * sandwich(left, D, right), grid, m, OperatorKind::momentum_alpha, alpha};
}

OperatorMatrix build_momentum_symmetrized(const Superpotential& W, const GridPtr& grid, double alpha) {
  const std::vector<double> d = safe_jacobian(W, *grid);
  const DenseMatrix D = difference_matrix(*grid);
  const std::size_t n = d.size();
  DenseMatrix P(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (D(i, j) == 0.0) continue;
      P(i, j) = cplx(0.0, -0.5) * D(i, j) * (1.0 / d[i] + 1.0 / d[j]);
    }
  }
  return {std::move(P), grid, Measure::dx, OperatorKind::momentum_symmetrized, alpha};
}

OperatorMatrix build_momentum_ordered_average(const Superpotential& W, const GridPtr& grid, double alpha) {
  const OperatorMatrix a = build_momentum_alpha(W, grid, alpha);
  const OperatorMatrix b = build_momentum_alpha(W, grid, 1.0 - alpha);
  return {cplx(0.5, 0.0) * (a.entries + b.entries), grid, Measure::dx, OperatorKind::momentum_symmetrized, alpha};
}

OperatorMatrix build_momentum_symmetrized_analytic(const Superpotential& W, const GridPtr& grid) {
  const std::vector<double> d = safe_jacobian(W, *grid);
  const DenseMatrix D = difference_matrix(*grid);
  const std::size_t n = d.size();
  std::vector<double> inv(n);
  std::vector<double> one(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) inv[i] = 1.0 / d[i];
  DenseMatrix P = kMinusI * sandwich(inv, D, one);
  for (std::size_t i = 0; i < n; ++i) {
    P(i, i) += cplx(0.0, 0.5 * W.second_derivative(grid->node(i)) / (d[i] * d[i]));
  }
  return {std::move(P), grid, Measure::dx, OperatorKind::momentum_symmetrized, 0.5};
}

OperatorMatrix build_momentum_w(const GridPtr& grid) {
  if (grid->rep() != Rep::w_domain) throw Error(ErrorCode::InvalidArgument, "momentum_w requires a w_domain grid");
  grid->spacing();  // throws NonUniformGrid
  return {kMinusI * difference_matrix(*grid), grid, Measure::dW, OperatorKind::momentum_w, 0.0};
}

OperatorMatrix build_similarity(const Superpotential& W, const GridPtr& grid, double alpha) {
  const std::vector<double> d = safe_jacobian(W, *grid);
  return {DenseMatrix::diagonal(powers(d, -alpha)), grid, Measure::dx, OperatorKind::similarity, alpha};
}

AdjointReport adjoint_report(const OperatorMatrix& P, const Superpotential& W) {
  require_x_grid(*P.grid);
  const DenseMatrix B = interior_block(P.entries);
  const DenseMatrix BH = adjoint(B);
  const std::size_t n = B.size();

  const std::vector<double> wd = dw_weights(W, *P.grid);
  std::vector<double> m(n);
  std::vector<double> minv(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = wd[i + 1];
    minv[i] = 1.0 / m[i];
  }

  AdjointReport r;
  r.interior_rows = n;
  r.norm = operator_norm(B);
  r.defect_dx = operator_norm(B - BH);
  r.defect_dW = operator_norm(B - sandwich(minv, BH, m));

  const double small = kSelfAdjointTol * r.norm;
  const double large = kBoundedAwayTol * r.norm;
  const bool sdx = r.defect_dx <= small;
  const bool sdw = r.defect_dW <= small;
  const bool ldx = r.defect_dx >= large;
  const bool ldw = r.defect_dW >= large;
  if (sdx && sdw) {
    r.classification = AdjointClass::self_adjoint_both;
  } else if (sdx && ldw) {
    r.classification = AdjointClass::self_adjoint_dx;
  } else if (sdw && ldx) {
    r.classification = AdjointClass::self_adjoint_dW;
  } else if (ldx && ldw) {
    r.classification = AdjointClass::neither;
  }
  return r;
}

double commutator_defect(const Superpotential& W, const OperatorMatrix& P, const SampledSignal& f) {
  if (!same_grid(*P.grid, *f.grid())) throw Error(ErrorCode::GridMismatch, "signal and operator grids differ");
  const std::vector<double> u = u_coordinates(W, *P.grid);
  const std::size_t n = u.size();
  std::vector<cplx> wf(n);
  for (std::size_t i = 0; i < n; ++i) wf[i] = u[i] * f[i];
  const std::vector<cplx> pf = kernels::omp::matvec(P.entries, f.values());
  const std::vector<cplx> pwf = kernels::omp::matvec(P.entries, wf);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    num += std::norm(u[i] * pf[i] - pwf[i] - cplx(0.0, 1.0) * f[i]);
    den += std::norm(f[i]);
  }
  if (den == 0.0) throw Error(ErrorCode::InvalidArgument, "test function vanishes on the interior");
  return std::sqrt(num / den);
}

SimilarityResult similarity_check(const Superpotential& W, const GridPtr& grid, double alpha) {
  const OperatorMatrix S = build_similarity(W, grid, alpha);
  const OperatorMatrix Pa = build_momentum_alpha(W, grid, alpha);
  const OperatorMatrix P0 = build_momentum_alpha(W, grid, 0.0);
  const std::size_t n = grid->size();
  std::vector<double> s(n);
  std::vector<double> sinv(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = S.entries(i, i).real();
    sinv[i] = 1.0 / s[i];
  }
  const DenseMatrix transformed = sandwich(s, Pa.entries, sinv);
  const DenseMatrix B0 = interior_block(P0.entries);
  return {operator_norm(interior_block(transformed) - B0), operator_norm(B0)};
}

}  // namespace wsp
