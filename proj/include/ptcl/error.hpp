#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptcl {

enum class ErrorCode {
  OutOfDomain,
  UnsupportedOrder,
  NonPositiveAlphaSquared,
  NonPositiveASquared,
  OriginEvaluation,
  DivergentState,
  NonNormalizable,
  OnCutOrOrigin,
  ZeroJacobian,
  ZeroEnergy,
  InvalidArgument,
  OverflowUnrecoverable,
  StepUnderflow,
  NonPositiveCritical,
  EqualIndices,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception; `code()` identifies the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NonPositiveAlphaSquared: return "NonPositiveAlphaSquared";
    case ErrorCode::NonPositiveASquared: return "NonPositiveASquared";
    case ErrorCode::OriginEvaluation: return "OriginEvaluation";
    case ErrorCode::DivergentState: return "DivergentState";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
    case ErrorCode::OnCutOrOrigin: return "OnCutOrOrigin";
    case ErrorCode::ZeroJacobian: return "ZeroJacobian";
    case ErrorCode::ZeroEnergy: return "ZeroEnergy";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OverflowUnrecoverable: return "OverflowUnrecoverable";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::NonPositiveCritical: return "NonPositiveCritical";
    case ErrorCode::EqualIndices: return "EqualIndices";
  }
  return "Unknown";
}

}  // namespace ptcl
