#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charforge {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  InvalidField,
  NotMonic,
  ZeroDegree,
  DimensionMismatch,
  DimensionLimit,
  NotSquare,
  SingularMatrix,
  Derogatory,
  CyclicSearchExhausted,
  TraceMismatch,
  DegreeMismatch,
  BadShape,
  BadBlockShape,
  IndexDomainMismatch,
  NotInvertible,
  EqualSplitUnsupported,
  InternalVerificationFailed,
  BadDimension,
  FieldTooSmall,
  GroupingInfeasible,
  NonzeroTrace,
  DimensionTooSmall,
  UnsupportedInfiniteField,
  NonInvertibleTarget,
  BudgetExceeded,
};

/// Stable textual name of an error code, e.g. "TraceMismatch".
std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition or domain failure in the library is reported through
/// this exception; the code is what callers (and the CLI) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace charforge
