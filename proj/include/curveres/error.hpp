#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curveres {

enum class ErrorKind {
  NotAUnit,
  OrderUnknown,
  NotDivisible,
  PrecisionExhausted,
  OrderNotOne,
  DegenerateCurve,
  InvalidBranch,
  DimensionMismatch,
  TooLarge,
  TangencyMismatch,
  NotEquisingular,
  LemmaHypothesisUnmet,
  StepLimit,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every recoverable failure of the engine carries one of the kinds above so
// callers (notably the CLI) can map it onto a stable exit code.
class CurveError : public std::runtime_error {
 public:
  CurveError(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curveres
