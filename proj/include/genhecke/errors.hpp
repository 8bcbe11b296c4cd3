#pragma once

#include <stdexcept>
#include <string>

namespace genhecke {

enum class ErrorKind {
  VariantMismatch,
  ParameterMismatch,
  NotAUnit,
  PointOffFiber,
  ParseError,
  TagMismatch,
  WrongCoefficientRing,
  MissingOrder,
  NotInSubalgebra,
  NotInvariant,
  BoundExceeded,
  ComparisonFailure,
  InvalidPoint,
  RelationViolation,
  NoCentralCharacter,
  NotOnParabola,
  NotIdempotent,
  NotCommuting,
  ForbiddenPattern,
  FieldTooLarge,
  ValidationError,
};

inline const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PointOffFiber: return "PointOffFiber";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::WrongCoefficientRing: return "WrongCoefficientRing";
    case ErrorKind::MissingOrder: return "MissingOrder";
    case ErrorKind::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ComparisonFailure: return "ComparisonFailure";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::NoCentralCharacter: return "NoCentralCharacter";
    case ErrorKind::NotOnParabola: return "NotOnParabola";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::ForbiddenPattern: return "ForbiddenPattern";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace genhecke
