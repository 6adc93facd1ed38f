// SPDX-License-Identifier: Apache-2.0
#include "wsp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsp::kernels {

namespace {

void check_matvec(const DenseMatrix& a, std::span<const cplx> v) {
  if (a.size() != v.size()) throw std::invalid_argument("matvec dimension mismatch");
}

cplx row_dot(const DenseMatrix& a, std::size_t i, std::span<const cplx> v) {
  const std::span<const cplx> r = a.row(i);
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * v[j];
  return acc;
}

cplx direct_term(std::span<const double> u, std::span<const cplx> weighted, double pa, int sign) {
  cplx acc{0.0, 0.0};
  const double s = static_cast<double>(sign);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double phase = s * pa * u[i];
    acc += weighted[i] * cplx(std::cos(phase), std::sin(phase));
  }
  return acc;
}

// Half-width of the symmetric overlap at row k.
std::size_t overlap(std::size_t k, std::size_t n) { return std::min(k, n - 1 - k); }

}  // namespace

namespace serial {

std::vector<cplx> matvec(const DenseMatrix& a, std::span<const cplx> v) {
  check_matvec(a, v);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = row_dot(a, i, v);
  return out;
}

std::vector<cplx> matvec_adjoint(const DenseMatrix& a, std::span<const cplx> v) {
  check_matvec(a, v);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::span<const cplx> r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) out[j] += std::conj(r[j]) * v[i];
  }
  return out;
}

std::vector<cplx> direct_sum(std::span<const double> u, std::span<const cplx> weighted,
                             std::span<const double> p, int sign, double scale) {
  if (u.size() != weighted.size()) throw std::invalid_argument("direct_sum length mismatch");
  std::vector<cplx> out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) out[a] = scale * direct_term(u, weighted, p[a], sign);
  return out;
}

std::vector<cplx> wigner(std::span<const cplx> g, double h, std::span<const double> p) {
  const std::size_t n = g.size();
  const std::size_t m = p.size();
  std::vector<cplx> out(n * m);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t L = overlap(k, n);
    for (std::size_t a = 0; a < m; ++a) {
      cplx acc{0.0, 0.0};
      for (std::size_t q = 0; q <= 2 * L; ++q) {
        const auto mm = static_cast<std::ptrdiff_t>(q) - static_cast<std::ptrdiff_t>(L);
        const double c = (L > 0 && (q == 0 || q == 2 * L)) ? 0.5 : 1.0;
        const double phase = 2.0 * p[a] * static_cast<double>(mm) * h;
        acc += c * std::conj(g[k + mm]) * g[k - mm] * cplx(std::cos(phase), std::sin(phase));
      }
      out[k * m + a] = acc * (h / std::numbers::pi);
    }
  }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<cplx> matvec(const DenseMatrix& a, std::span<const cplx> v) {
  check_matvec(a, v);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  std::vector<cplx> out(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = row_dot(a, static_cast<std::size_t>(i), v);
  return out;
}

std::vector<cplx> matvec_adjoint(const DenseMatrix& a, std::span<const cplx> v) {
  check_matvec(a, v);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  std::vector<cplx> out(a.size());
  // Column-parallel so that every output slot has a single writer.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    cplx acc{0.0, 0.0};
    for (std::ptrdiff_t i = 0; i < n; ++i) acc += std::conj(a(i, j)) * v[i];
    out[j] = acc;
  }
  return out;
}

std::vector<cplx> direct_sum(std::span<const double> u, std::span<const cplx> weighted,
                             std::span<const double> p, int sign, double scale) {
  if (u.size() != weighted.size()) throw std::invalid_argument("direct_sum length mismatch");
  const auto m = static_cast<std::ptrdiff_t>(p.size());
  std::vector<cplx> out(p.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < m; ++a) out[a] = scale * direct_term(u, weighted, p[a], sign);
  return out;
}

std::vector<cplx> wigner(std::span<const cplx> g, double h, std::span<const double> p) {
  const std::size_t n = g.size();
  const std::size_t m = p.size();
  const std::size_t half = (n - 1) / 2;

  // phase[a * (half + 1) + q] = exp(2i p_a q h); negative shifts use the conjugate.
  std::vector<cplx> phase(m * (half + 1));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(m); ++a) {
    for (std::size_t q = 0; q <= half; ++q) {
      const double t = 2.0 * p[a] * static_cast<double>(q) * h;
      phase[a * (half + 1) + q] = cplx(std::cos(t), std::sin(t));
    }
  }

  std::vector<cplx> out(n * m);
#pragma omp parallel
  {
    std::vector<cplx> r;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(n); ++kk) {
      const auto k = static_cast<std::size_t>(kk);
      const std::size_t L = overlap(k, n);
      r.assign(2 * L + 1, cplx{});
      for (std::size_t q = 0; q <= 2 * L; ++q) {
        const double c = (L > 0 && (q == 0 || q == 2 * L)) ? 0.5 : 1.0;
        r[q] = c * std::conj(g[k + q - L]) * g[k + L - q];
      }
      for (std::size_t a = 0; a < m; ++a) {
        const cplx* ph = &phase[a * (half + 1)];
        cplx acc{0.0, 0.0};
        for (std::size_t q = 0; q <= 2 * L; ++q) {
          const cplx e = q >= L ? ph[q - L] : std::conj(ph[L - q]);
          acc += r[q] * e;
        }
        out[k * m + a] = acc * (h / std::numbers::pi);
      }
    }
  }
  return out;
}

}  // namespace omp

}  // namespace wsp::kernels
