#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellgenus {

enum class ErrorKind {
  Overflow,
  Parse,
  NotAnIsometry,
  LatticeMismatch,
  NonIntegralReflection,
  BadTransvectionData,
  DegenerateFrame,
  NeedTwoHyperbolicPlanes,
  ZeroClass,
  NotOrthogonalToK,
  PreconditionFailed,
  BadParameters,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps onto exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ellgenus
