// SPDX-License-Identifier: Apache-2.0
#pragma once

// Hot loops in two flavours: a plain serial reference and an OpenMP version.
// Both compute the same sums term by term; tests compare them and the
// benchmark times them.

#include <complex>
#include <span>
#include <vector>

#include "wsp/dense_matrix.hpp"

namespace wsp::kernels {

namespace serial {

std::vector<cplx> matvec(const DenseMatrix& a, std::span<const cplx> v);
std::vector<cplx> matvec_adjoint(const DenseMatrix& a, std::span<const cplx> v);

/// out[a] = scale * sum_i weighted[i] * exp(sign * i * p[a] * u[i]).
std::vector<cplx> direct_sum(std::span<const double> u, std::span<const cplx> weighted,
                             std::span<const double> p, int sign, double scale);

/// Pseudo-Wigner sum on a uniform grid of spacing h.
///
/// out[k * p.size() + a] = (1/pi) sum_m c_m h conj(g[k+m]) g[k-m] exp(2i p[a] m h)
/// with m over the symmetric overlap |m| <= min(k, n-1-k) and trapezoid
/// end weights c_m. The result is complex; its imaginary part is a diagnostic.
std::vector<cplx> wigner(std::span<const cplx> g, double h, std::span<const double> p);

}  // namespace serial

namespace omp {

std::vector<cplx> matvec(const DenseMatrix& a, std::span<const cplx> v);
std::vector<cplx> matvec_adjoint(const DenseMatrix& a, std::span<const cplx> v);
std::vector<cplx> direct_sum(std::span<const double> u, std::span<const cplx> weighted,
                             std::span<const double> p, int sign, double scale);
std::vector<cplx> wigner(std::span<const cplx> g, double h, std::span<const double> p);

}  // namespace omp

}  // namespace wsp::kernels
