#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

enum class ErrorCode {
  UndefinedProjection,
  BelowParabola,
  NotARoot,
  NonpositiveRank,
  DegenerateCharge,
  InvalidCharge,
  ProportionalClasses,
  UnderdeterminedLine,
  EmptySlopeWindow,
  PreconditionViolation,
  ConstraintViolation,
  EndpointMismatch,
  UndecidedComparison,
  WallMismatch,
  NoWallFound,
  UsageError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}
