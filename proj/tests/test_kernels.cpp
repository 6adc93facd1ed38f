#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "wsp/chirpz.hpp"
#include "wsp/kernels.hpp"

using namespace wsp;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = cplx(d(rng), d(rng));
  return v;
}

DenseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  const std::vector<cplx> v = random_vector(n * n, seed);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
  }
  return a;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("matvec flavours agree with each other and a naive product") {
    const DenseMatrix a = random_matrix(67, 1);
    const std::vector<cplx> v = random_vector(67, 2);
    const std::vector<cplx> s = kernels::serial::matvec(a, v);
    const std::vector<cplx> o = kernels::omp::matvec(a, v);
    const std::vector<cplx> sh = kernels::serial::matvec_adjoint(a, v);
    const std::vector<cplx> oh = kernels::omp::matvec_adjoint(a, v);
    for (std::size_t i = 0; i < 67; ++i) {
      cplx acc = 0.0, acch = 0.0;
      for (std::size_t j = 0; j < 67; ++j) {
        acc += a(i, j) * v[j];
        acch += std::conj(a(j, i)) * v[j];
      }
      CHECK(s[i] == o[i]);
      CHECK(sh[i] == oh[i]);
      CHECK(std::abs(s[i] - acc) <= 1e-13);
      CHECK(std::abs(sh[i] - acch) <= 1e-13);
    }
  }

  TEST_CASE("direct sums agree") {
    std::vector<double> u(300), p(170);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = -3.0 + 0.021 * i + 0.001 * std::sin(3.0 * i);
    for (std::size_t a = 0; a < p.size(); ++a) p[a] = -5.0 + 0.06 * a;
    const std::vector<cplx> w = random_vector(u.size(), 3);
    for (int sign : {-1, 1}) {
      const std::vector<cplx> s = kernels::serial::direct_sum(u, w, p, sign, 0.7);
      const std::vector<cplx> o = kernels::omp::direct_sum(u, w, p, sign, 0.7);
      for (std::size_t a = 0; a < p.size(); ++a) {
        CHECK(s[a] == o[a]);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) acc += w[i] * std::exp(cplx(0.0, sign * p[a] * u[i]));
        CHECK(std::abs(s[a] - 0.7 * acc) <= 1e-12 * u.size());
      }
    }
  }

  TEST_CASE("wigner kernels agree with a naive sum") {
    const std::vector<cplx> g = random_vector(41, 4);
    std::vector<double> p{-1.0, 0.0, 0.25, 2.0};
    const double h = 0.1;
    const std::vector<cplx> s = kernels::serial::wigner(g, h, p);
    const std::vector<cplx> o = kernels::omp::wigner(g, h, p);
    const long n = 41;
    for (long k = 0; k < n; ++k) {
      const long reach = std::min(k, n - 1 - k);
      for (std::size_t a = 0; a < p.size(); ++a) {
        cplx acc = 0.0;
        for (long m = -reach; m <= reach; ++m) {
          const double c = (std::abs(m) == reach && reach > 0) ? 0.5 : 1.0;
          acc += c * h * std::conj(g[k + m]) * g[k - m] * std::exp(cplx(0.0, 2.0 * p[a] * m * h));
        }
        acc /= 3.14159265358979323846;
        CHECK(s[k * p.size() + a] == o[k * p.size() + a]);
        CHECK(std::abs(s[k * p.size() + a] - acc) <= 1e-13);
      }
    }
  }

  TEST_CASE("chirp-z matches the direct sum") {
    const std::vector<cplx> x = random_vector(200, 5);
    struct Case {
      double du, dp;
      std::size_t m;
    };
    for (const Case& c : {Case{0.05, 0.031, 77}, Case{0.13, 0.2, 300}, Case{0.01, 1.7, 5}}) {
      const auto [du, dp, m] = c;
      const double u0 = -4.3, p0 = -2.0;
      const std::vector<cplx> z = chirp_z(x, u0, du, p0, dp, m, -1);
      std::vector<double> u(x.size()), p(m);
      for (std::size_t k = 0; k < u.size(); ++k) u[k] = u0 + du * k;
      for (std::size_t a = 0; a < m; ++a) p[a] = p0 + dp * a;
      const std::vector<cplx> ref = kernels::serial::direct_sum(u, x, p, -1, 1.0);
      double worst = 0.0, scale = 0.0;
      for (std::size_t a = 0; a < m; ++a) {
        worst = std::max(worst, std::abs(z[a] - ref[a]));
        scale = std::max(scale, std::abs(ref[a]));
      }
      CHECK(worst <= 1e-11 * scale);
    }
  }

  TEST_CASE("dense matrix helpers") {
    const DenseMatrix a = random_matrix(5, 6);
    const DenseMatrix ah = adjoint(a);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) CHECK(ah(i, j) == std::conj(a(j, i)));
    }
    const std::vector<double> l{1, 2, 3, 4, 5}, r{5, 4, 3, 2, 1};
    const DenseMatrix s = sandwich(l, a, r);
    CHECK(s(1, 3) == a(1, 3) * 2.0 * 2.0);
    const DenseMatrix in = interior_block(a);
    CHECK(in.size() == 3);
    CHECK(in(0, 0) == a(1, 1));
    CHECK((a - a)(2, 2) == cplx(0.0));
    CHECK((a + a)(2, 2) == 2.0 * a(2, 2));
    CHECK(DenseMatrix::identity(4)(3, 3) == cplx(1.0));
  }
}
