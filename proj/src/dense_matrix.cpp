// SPDX-License-Identifier: Apache-2.0
#include "wsp/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "wsp/kernels.hpp"

namespace wsp {

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  const std::size_t n = a.size();
  DenseMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

namespace {

void require_same_size(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix dimensions differ");
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a, b);
  DenseMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a, b);
  DenseMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  }
  return c;
}

DenseMatrix operator*(cplx s, const DenseMatrix& a) {
  DenseMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

DenseMatrix sandwich(std::span<const double> l, const DenseMatrix& a, std::span<const double> r) {
  if (l.size() != a.size() || r.size() != a.size()) throw std::invalid_argument("diagonal length mismatch");
  DenseMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = l[i] * a(i, j) * r[j];
  }
  return c;
}

DenseMatrix interior_block(const DenseMatrix& a) {
  if (a.size() < 3) throw std::invalid_argument("interior block needs at least 3 rows");
  const std::size_t n = a.size() - 2;
  DenseMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i + 1, j + 1);
  }
  return b;
}

double operator_norm(const DenseMatrix& a, double rel_tol, int max_iter) {
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i);
    v[i] = cplx(1.0 + 0.5 * std::cos(0.37 * t), 0.5 * std::sin(0.91 * t));
  }
  auto normalize = [](std::vector<cplx>& x) {
    double s = 0.0;
    for (const cplx& c : x) s += std::norm(c);
    s = std::sqrt(s);
    if (s > 0.0) {
      for (cplx& c : x) c /= s;
    }
    return s;
  };
  normalize(v);

  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    std::vector<cplx> av = kernels::omp::matvec(a, v);
    double s = 0.0;
    for (const cplx& c : av) s += std::norm(c);
    const double next = std::sqrt(s);
    if (next == 0.0) return 0.0;
    v = kernels::omp::matvec_adjoint(a, av);
    normalize(v);
    if (it > 0 && std::abs(next - sigma) <= rel_tol * next) return next;
    sigma = next;
  }
  return sigma;
}

}  // namespace wsp
