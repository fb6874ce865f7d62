#include "ellgenus/error.hpp"

namespace ellgenus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NonIntegralReflection: return "NonIntegralReflection";
    case ErrorKind::BadTransvectionData: return "BadTransvectionData";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NeedTwoHyperbolicPlanes: return "NeedTwoHyperbolicPlanes";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::NotOrthogonalToK: return "NotOrthogonalToK";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace ellgenus
