#pragma once

#include <stdexcept>
#include <string>

namespace reflekt {

enum class ErrorCode {
  DivisionByZero,
  ConductorTooLarge,
  ParseError,
  NotSquare,
  DimensionMismatch,
  CapExceeded,
  NotFinite,
  NotSubgroup,
  NotReflectionGroup,
  BoundTooSmall,
  NotNormal,
  SpanViolation,
  NotGood,
  ContainsReflection,
  IndexNotPrime,
  NotNormalizing,
  NonPrincipalUnsupported,
  UnknownName,
  SelfCheckFailed,
  MalformedDiagram,
  RuleMismatch,
  CosetLimitExceeded,
  UnknownCommand,
  Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace reflekt
