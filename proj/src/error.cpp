// SPDX-License-Identifier: Apache-2.0
#include "wsp/error.hpp"

namespace wsp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RejectNegativeCoefficient: return "RejectNegativeCoefficient";
    case ErrorCode::RejectEvenLeadingPower: return "RejectEvenLeadingPower";
    case ErrorCode::RejectEvenLowestPower: return "RejectEvenLowestPower";
    case ErrorCode::RejectEvenDominance: return "RejectEvenDominance";
    case ErrorCode::RejectNonMonotone: return "RejectNonMonotone";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::DegenerateEigenvalues: return "DegenerateEigenvalues";
    case ErrorCode::TruncationCap: return "TruncationCap";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ClippingExceeded: return "ClippingExceeded";
    case ErrorCode::CenterOutOfRange: return "CenterOutOfRange";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_rejection(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RejectNegativeCoefficient:
    case ErrorCode::RejectEvenLeadingPower:
    case ErrorCode::RejectEvenLowestPower:
    case ErrorCode::RejectEvenDominance:
    case ErrorCode::RejectNonMonotone:
      return true;
    default:
      return false;
  }
}

bool is_numeric_guard(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BracketFailure:
    case ErrorCode::SingularJacobian:
    case ErrorCode::NonMonotone:
    case ErrorCode::DegenerateEigenvalues:
    case ErrorCode::TruncationCap:
    case ErrorCode::TruncationOverflow:
    case ErrorCode::TailTooLarge:
    case ErrorCode::NotNormalized:
    case ErrorCode::ClippingExceeded:
    case ErrorCode::CenterOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace wsp
