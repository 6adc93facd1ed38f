// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wsp/error.hpp"

namespace wsp {

/// Threshold on |W'(x)| below which a real root of W' is classified as a
/// critical point.
inline constexpr double kCriticalPointTolerance = 1e-12;

enum class Monotonicity { strictly_monotone, monotone_with_critical_points };

std::string_view to_string(Monotonicity m) noexcept;

struct MonotonicityClass {
  Monotonicity tag = Monotonicity::strictly_monotone;
  std::vector<double> critical_points;  // sorted
};

/// Admissible polynomial generalized coordinate W(x) = sum_{j>=1} a_j x^j.
///
/// Only obtainable through validate(), so every instance satisfies:
///   - a_j >= 0,
///   - the lowest and the highest non-zero powers are odd,
///   - a_{2m} <= a_{2m-1} for every even power,
///   - W' >= 0 on the real line (checked on the real roots of W').
/// W(0) = 0 and W is a bijection of the real line. Instances are immutable.
class Superpotential {
 public:
  /// Coefficients a_1 .. a_{2J+1} (index 1 first, trailing zeros stripped).
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  const MonotonicityClass& monotonicity() const noexcept { return monotonicity_; }
  bool strictly_monotone() const noexcept {
    return monotonicity_.tag == Monotonicity::strictly_monotone;
  }

  /// W(x) = x exactly (every measure and ordering coincides).
  bool is_identity() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1.0; }
  bool is_linear() const noexcept { return coeffs_.size() == 1; }
  /// Only odd powers present, so W(-x) = -W(x).
  bool is_odd() const noexcept;

  double eval(double x) const noexcept;
  double derivative(double x) const noexcept;
  double second_derivative(double x) const noexcept;

  /// Solves W(x) = w. The residual satisfies |W(x) - w| <= 1e-12 (1 + |w|);
  /// in practice the iteration runs until the bracket collapses.
  double invert(double w) const;

  /// exp(-int_0^x W), normalized to 1 at x = 0.
  double susy_ground_state(double x) const noexcept;

  /// W(x)^2 - W'(x).
  double susy_potential(double x) const noexcept;

 private:
  friend Superpotential validate(std::span<const double> coeffs);
  Superpotential() = default;

  std::vector<double> coeffs_;       // a_1 .. a_n
  std::vector<double> power_;        // 0, a_1, .., a_n (ascending, with constant term)
  std::vector<double> d1_;           // W'
  std::vector<double> d2_;           // W''
  std::vector<double> integral_;     // int_0^x W
  MonotonicityClass monotonicity_;
};

/// Validates a coefficient list a_1, a_2, ... and classifies monotonicity.
Superpotential validate(std::span<const double> coeffs);

inline Superpotential validate(std::initializer_list<double> coeffs) {
  return validate(std::span<const double>(coeffs.begin(), coeffs.size()));
}

}  // namespace wsp
