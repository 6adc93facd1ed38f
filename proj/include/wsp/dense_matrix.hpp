// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wsp {

using cplx = std::complex<double>;

/// Square complex matrix stored row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const cplx> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const cplx> data() const noexcept { return data_; }

  static DenseMatrix diagonal(std::span<const double> d);
  static DenseMatrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

DenseMatrix adjoint(const DenseMatrix& a);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, const DenseMatrix& a);

/// diag(l) * A * diag(r).
DenseMatrix sandwich(std::span<const double> l, const DenseMatrix& a, std::span<const double> r);

/// Rows and columns 1 .. n-2.
DenseMatrix interior_block(const DenseMatrix& a);

/// Largest singular value by power iteration on A^H A.
///
/// Starts from a fixed vector, so repeated calls return identical values.
/// Stops when successive estimates agree to rel_tol.
double operator_norm(const DenseMatrix& a, double rel_tol = 1e-6, int max_iter = 5000);

}  // namespace wsp
