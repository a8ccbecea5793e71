#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddfact {

enum class ErrorCode {
  NonPrime,
  EvenCharacteristic,
  FieldMismatch,
  DivisionByZero,
  ZeroArgument,
  DimensionMismatch,
  SingularVector,
  SingularMatrix,
  NoMinusVector,
  UnknownFamily,
  BadParams,
  BadFactorization,
  BadCharacteristic,
  CertificationFailure,
  MissingData,
  ParseError,
  IsometryViolation,
  DomainOverflow,
  NotFaithful,
  IndexOverflow,
  StrategyUnavailable,
  NotFound,
  CapExceeded,
  ConstructionFailure,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularVector: return "SingularVector";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoMinusVector: return "NoMinusVector";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IsometryViolation: return "IsometryViolation";
    case ErrorCode::DomainOverflow: return "DomainOverflow";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::IndexOverflow: return "IndexOverflow";
    case ErrorCode::StrategyUnavailable: return "StrategyUnavailable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
  }
  return "Unknown";
}

}  // namespace oddfact
