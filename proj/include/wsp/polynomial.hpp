// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

// Dense real polynomials in ascending-power order: c[0] + c[1] x + c[2] x^2 + ...
namespace wsp::poly {

double horner(std::span<const double> c, double x) noexcept;

std::vector<double> derivative(std::span<const double> c);

/// Antiderivative vanishing at x = 0.
std::vector<double> antiderivative(std::span<const double> c);

/// Sorted real roots of a polynomial with arbitrary real coefficients.
///
/// The roots of the derivative (found recursively) split the real line into
/// intervals on which the polynomial is monotone; every strict sign change on
/// such an interval is refined by bisection with Newton acceleration.
/// Extrema where |p| <= touch_tol are reported as (even-multiplicity) roots.
std::vector<double> real_roots(std::span<const double> c, double touch_tol);

}  // namespace wsp::poly
