// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsp/grid.hpp"
#include "wsp/superpotential.hpp"

namespace wsp {

/// Settings for the verification suite. Defaults reproduce the full suite.
struct VerifyConfig {
  /// Superpotentials for operator, basis and transform checks.
  std::vector<std::vector<double>> superpotentials{{1.0}, {1.0, 0.0, 1.0}};
  /// Extra superpotential used only by transform checks (W = x^3).
  std::vector<double> transform_only{0.0, 0.0, 1.0};
  double xmin = -8.0;
  double xmax = 8.0;
  std::size_t n = 1024;
  double pmin = -8.0;
  double pmax = 8.0;
  std::size_t m = 1024;
  std::vector<double> alphas{0.0, 0.3, 0.5, 1.0};
  std::vector<std::size_t> refinement{256, 512, 1024};
  /// Named bounds; see default_tolerances().
  std::map<std::string, double> tolerances;
  /// Criteria to run (1..13); empty runs all.
  std::vector<int> criteria;
  /// Mutation fixture: flips the sign of the forward kernel.
  bool inject_kernel_sign_fault = false;
  std::uint64_t seed = 20240601;
};

std::map<std::string, double> default_tolerances();

/// One measured quantity. It passes iff lower <= value <= upper.
struct CheckResult {
  int criterion = 0;
  std::string name;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

struct OperatorRecord {
  std::string w;
  std::string kind;
  double alpha = 0.0;
  std::size_t n = 0;
  double defect_dx = -1.0;
  double defect_dW = -1.0;
  double norm = -1.0;
  double commutator_defect = -1.0;
  double similarity_residual = -1.0;
  std::string classification;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<OperatorRecord> operators;

  bool all_pass() const noexcept;
  bool criterion_pass(int criterion) const noexcept;
};

inline constexpr int kCriterionCount = 13;

std::string_view criterion_title(int criterion) noexcept;

/// Runs the selected criteria. Throws wsp::Error for an invalid configuration.
VerifyReport run_verification(const VerifyConfig& config);

/// Short human-readable name for a coefficient list, e.g. "x+x^3".
std::string describe(const std::vector<double>& coeffs);

}  // namespace wsp
