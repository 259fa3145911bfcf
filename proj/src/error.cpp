#include "reflekt/error.hpp"

namespace reflekt {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotReflectionGroup: return "NotReflectionGroup";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::SpanViolation: return "SpanViolation";
    case ErrorCode::NotGood: return "NotGood";
    case ErrorCode::ContainsReflection: return "ContainsReflection";
    case ErrorCode::IndexNotPrime: return "IndexNotPrime";
    case ErrorCode::NotNormalizing: return "NotNormalizing";
    case ErrorCode::NonPrincipalUnsupported: return "NonPrincipalUnsupported";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::RuleMismatch: return "RuleMismatch";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::Internal: return "Internal";
  }
  return "Error";
}

}  // namespace reflekt
