// SPDX-License-Identifier: Apache-2.0
#include "wsp/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wsp/polynomial.hpp"

namespace wsp {

std::string_view to_string(Monotonicity m) noexcept {
  return m == Monotonicity::strictly_monotone ? "strictly_monotone" : "monotone_with_critical_points";
}

namespace {

[[noreturn]] void reject(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

std::string power_name(std::size_t j) {
  std::ostringstream os;
  os << "x^" << j;
  return os.str();
}

}  // namespace

Superpotential validate(std::span<const double> input) {
  if (input.empty()) reject(ErrorCode::InvalidArgument, "empty coefficient list");
  for (double a : input) {
    if (!std::isfinite(a)) reject(ErrorCode::InvalidArgument, "non-finite coefficient");
  }
  for (std::size_t k = 0; k < input.size(); ++k) {
    if (input[k] < 0.0) {
      reject(ErrorCode::RejectNegativeCoefficient, "coefficient of " + power_name(k + 1) + " is negative");
    }
  }

  std::vector<double> a(input.begin(), input.end());
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.empty()) reject(ErrorCode::InvalidArgument, "W is identically zero");

  // a[k] is the coefficient of x^(k+1).
  const std::size_t highest = a.size();
  if (highest % 2 == 0) {
    reject(ErrorCode::RejectEvenLeadingPower, "highest power " + power_name(highest) + " is even");
  }
  const auto first = static_cast<std::size_t>(std::find_if(a.begin(), a.end(), [](double v) { return v != 0.0; }) - a.begin());
  if ((first + 1) % 2 == 0) {
    reject(ErrorCode::RejectEvenLowestPower, "lowest power " + power_name(first + 1) + " is even");
  }
  for (std::size_t j = 2; j <= highest; j += 2) {
    if (a[j - 1] > a[j - 2]) {
      reject(ErrorCode::RejectEvenDominance,
             "coefficient of " + power_name(j) + " exceeds that of " + power_name(j - 1));
    }
  }

  Superpotential w;
  w.coeffs_ = a;
  w.power_.assign(1, 0.0);
  w.power_.insert(w.power_.end(), a.begin(), a.end());
  w.d1_ = poly::derivative(w.power_);
  w.d2_ = poly::derivative(w.d1_);
  w.integral_ = poly::antiderivative(w.power_);

  const std::vector<double> roots = poly::real_roots(w.d1_, kCriticalPointTolerance);

  // W' has even degree with positive leading coefficient; it must not dip
  // below zero between (or outside) its real roots.
  std::vector<double> probes;
  if (roots.empty()) {
    probes.push_back(0.0);
  } else {
    probes.push_back(roots.front() - 1.0);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) probes.push_back(0.5 * (roots[k] + roots[k + 1]));
    probes.push_back(roots.back() + 1.0);
  }
  for (double x : probes) {
    if (poly::horner(w.d1_, x) < -kCriticalPointTolerance) {
      std::ostringstream os;
      os << "W'(" << x << ") < 0; W is not monotone";
      reject(ErrorCode::RejectNonMonotone, os.str());
    }
  }

  w.monotonicity_.critical_points = roots;
  w.monotonicity_.tag = roots.empty() ? Monotonicity::strictly_monotone : Monotonicity::monotone_with_critical_points;
  return w;
}

bool Superpotential::is_odd() const noexcept {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (coeffs_[k] != 0.0) return false;
  }
  return true;
}

double Superpotential::eval(double x) const noexcept { return poly::horner(power_, x); }

double Superpotential::derivative(double x) const noexcept { return poly::horner(d1_, x); }

double Superpotential::second_derivative(double x) const noexcept { return poly::horner(d2_, x); }

double Superpotential::susy_ground_state(double x) const noexcept {
  return std::exp(-poly::horner(integral_, x));
}

double Superpotential::susy_potential(double x) const noexcept {
  const double w = eval(x);
  return w * w - derivative(x);
}

double Superpotential::invert(double w) const {
  if (!std::isfinite(w)) throw Error(ErrorCode::BracketFailure, "cannot invert a non-finite value");
  if (is_linear()) return w / coeffs_[0];

  double lo = -1.0;
  double hi = 1.0;
  while (eval(hi) < w) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(eval(hi))) throw Error(ErrorCode::BracketFailure, "upper bracket overflow");
  }
  while (eval(lo) > w) {
    hi = std::min(hi, lo);
    lo *= 2.0;
    if (!std::isfinite(eval(lo))) throw Error(ErrorCode::BracketFailure, "lower bracket overflow");
  }

  // Start from the dominant-term estimate, clamped into the bracket.
  const double lead = coeffs_.back();
  double x = std::copysign(std::pow(std::abs(w) / lead, 1.0 / static_cast<double>(degree())), w);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

  for (int it = 0; it < 400; ++it) {
    const double f = eval(x) - w;
    if (f == 0.0) return x;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = derivative(x);
    double next = 0.5 * (lo + hi);
    if (d > 1e-300) {
      const double newton = x - f / d;
      if (newton > lo && newton < hi) next = newton;
    }
    if (next == x || !(hi > lo) || std::nextafter(lo, hi) >= hi) {
      x = next;
      break;
    }
    x = next;
  }

  // The bracket ends are candidates too; keep whichever has the smallest residual.
  double best = x;
  for (double cand : {lo, hi}) {
    if (std::abs(eval(cand) - w) < std::abs(eval(best) - w)) best = cand;
  }
  if (std::abs(eval(best) - w) > 1e-12 * (1.0 + std::abs(w))) {
    throw Error(ErrorCode::BracketFailure, "inversion did not converge");
  }
  return best;
}

}  // namespace wsp
