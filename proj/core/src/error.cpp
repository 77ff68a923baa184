#include "charforge/error.hpp"

namespace charforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionLimit: return "DimensionLimit";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::Derogatory: return "Derogatory";
    case ErrorCode::CyclicSearchExhausted: return "CyclicSearchExhausted";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BadBlockShape: return "BadBlockShape";
    case ErrorCode::IndexDomainMismatch: return "IndexDomainMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::EqualSplitUnsupported: return "EqualSplitUnsupported";
    case ErrorCode::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::GroupingInfeasible: return "GroupingInfeasible";
    case ErrorCode::NonzeroTrace: return "NonzeroTrace";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnsupportedInfiniteField: return "UnsupportedInfiniteField";
    case ErrorCode::NonInvertibleTarget: return "NonInvertibleTarget";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace charforge
