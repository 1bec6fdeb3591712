#include "curveres/error.hpp"

namespace curveres {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::OrderUnknown: return "OrderUnknown";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::OrderNotOne: return "OrderNotOne";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::InvalidBranch: return "InvalidBranch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TangencyMismatch: return "TangencyMismatch";
    case ErrorKind::NotEquisingular: return "NotEquisingular";
    case ErrorKind::LemmaHypothesisUnmet: return "LemmaHypothesisUnmet";
    case ErrorKind::StepLimit: return "StepLimit";
  }
  return "Unknown";
}

CurveError::CurveError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace curveres
