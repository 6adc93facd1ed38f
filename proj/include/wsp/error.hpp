// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsp {

enum class ErrorCode {
  InvalidArgument,
  // superpotential validation
  RejectNegativeCoefficient,
  RejectEvenLeadingPower,
  RejectEvenLowestPower,
  RejectEvenDominance,
  RejectNonMonotone,
  BracketFailure,
  // grids
  BadBounds,
  TooFewNodes,
  GridMismatch,
  NonUniformGrid,
  // operators and bases
  SingularJacobian,
  NonMonotone,
  DegenerateEigenvalues,
  TruncationCap,
  // phase space
  TruncationOverflow,
  TailTooLarge,
  NotNormalized,
  // transforms
  ClippingExceeded,
  CenterOutOfRange,
  // I/O
  IoError,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for the codes produced by superpotential validation (CLI exit 2).
bool is_validation_rejection(ErrorCode code) noexcept;

/// True for numeric guards that trip on otherwise well-formed input (CLI exit 4).
bool is_numeric_guard(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wsp
