// SPDX-License-Identifier: Apache-2.0
#include "wsp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsp::poly {

double horner(std::span<const double> c, double x) noexcept {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  return d;
}

std::vector<double> antiderivative(std::span<const double> c) {
  std::vector<double> a(c.size() + 1, 0.0);
  for (std::size_t j = 0; j < c.size(); ++j) a[j + 1] = c[j] / static_cast<double>(j + 1);
  return a;
}

namespace {

std::vector<double> trimmed(std::span<const double> c) {
  std::vector<double> t(c.begin(), c.end());
  while (t.size() > 1 && t.back() == 0.0) t.pop_back();
  return t;
}

// Root of a polynomial on [lo, hi] given a strict sign change.
double refine_root(std::span<const double> c, std::span<const double> dc, double lo, double hi) {
  double flo = horner(c, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    const double fx = horner(c, x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double dfx = horner(dc, x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

std::vector<double> real_roots(std::span<const double> coeffs, double touch_tol) {
  const std::vector<double> c = trimmed(coeffs);
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-c[0] / c[1]};

  const std::vector<double> dc = derivative(c);
  const std::vector<double> crit = real_roots(dc, touch_tol);

  // Cauchy bound: every real root lies strictly inside (-bound, bound).
  double bound = 0.0;
  for (std::size_t j = 0; j < deg; ++j) bound = std::max(bound, std::abs(c[j] / c[deg]));
  bound += 1.0;

  std::vector<double> breaks;
  breaks.push_back(-bound);
  for (double r : crit) {
    if (r > -bound && r < bound) breaks.push_back(r);
  }
  breaks.push_back(bound);

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double fl = horner(c, breaks[k]);
    const double fr = horner(c, breaks[k + 1]);
    if ((fl < 0.0 && fr > 0.0) || (fl > 0.0 && fr < 0.0)) {
      roots.push_back(refine_root(c, dc, breaks[k], breaks[k + 1]));
    }
  }
  for (double r : crit) {
    if (std::abs(horner(c, r)) <= touch_tol) roots.push_back(r);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 1e-9 * (1.0 + std::abs(r))) unique.push_back(r);
  }
  return unique;
}

}  // namespace wsp::poly
