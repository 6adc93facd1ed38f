// SPDX-License-Identifier: Apache-2.0
#include "wsp/chirpz.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace wsp {

namespace {

using cplx = std::complex<double>;

// FFTW's planner is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftBuffer {
 public:
  explicit FftBuffer(std::size_t n) : n_(n), data_(fftw_alloc_complex(n)) {
    if (data_ == nullptr) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(n), data_, data_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(static_cast<int>(n), data_, data_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~FftBuffer() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(data_);
  }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  cplx* data() noexcept { return reinterpret_cast<cplx*>(data_); }
  void forward() noexcept { fftw_execute(fwd_); }
  void backward() noexcept { fftw_execute(bwd_); }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  fftw_complex* data_;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

}  // namespace

std::vector<cplx> chirp_z(std::span<const cplx> x, double u0, double du, double p0, double dp, std::size_t m,
                          int sign) {
  const std::size_t k = x.size();
  if (k == 0 || m == 0) return std::vector<cplx>(m);
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double theta = dp * du;
  const std::size_t len = std::bit_ceil(k + m - 1);

  // a k = (a^2 + k^2 - (a - k)^2) / 2 turns the sum into a convolution with
  // the chirp exp(-s i theta n^2 / 2).
  FftBuffer y(len);
  FftBuffer c(len);
  cplx* yd = y.data();
  cplx* cd = c.data();
  for (std::size_t i = 0; i < len; ++i) yd[i] = cd[i] = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double jj = static_cast<double>(j);
    yd[j] = x[j] * expi(s * (p0 * jj * du + 0.5 * theta * jj * jj));
  }
  for (std::size_t n = 0; n < m; ++n) {
    const double nn = static_cast<double>(n);
    cd[n] = expi(-s * 0.5 * theta * nn * nn);
  }
  for (std::size_t n = 1; n < k; ++n) {
    const double nn = static_cast<double>(n);
    cd[len - n] = expi(-s * 0.5 * theta * nn * nn);
  }

  y.forward();
  c.forward();
  for (std::size_t i = 0; i < len; ++i) yd[i] *= cd[i];
  y.backward();

  std::vector<cplx> out(m);
  const double inv = 1.0 / static_cast<double>(len);
  for (std::size_t a = 0; a < m; ++a) {
    const double aa = static_cast<double>(a);
    out[a] = yd[a] * inv * expi(s * (p0 * u0 + aa * dp * u0 + 0.5 * theta * aa * aa));
  }
  return out;
}

}  // namespace wsp
