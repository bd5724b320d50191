#include "mukai/errors.hpp"

namespace mukai {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndefinedProjection: return "undefined-projection";
    case ErrorCode::BelowParabola: return "below-parabola";
    case ErrorCode::NotARoot: return "not-a-root";
    case ErrorCode::NonpositiveRank: return "nonpositive-rank";
    case ErrorCode::DegenerateCharge: return "degenerate-charge";
    case ErrorCode::InvalidCharge: return "invalid-charge";
    case ErrorCode::ProportionalClasses: return "proportional-classes";
    case ErrorCode::UnderdeterminedLine: return "underdetermined-line";
    case ErrorCode::EmptySlopeWindow: return "empty-slope-window";
    case ErrorCode::PreconditionViolation: return "precondition-violation";
    case ErrorCode::ConstraintViolation: return "constraint-violation";
    case ErrorCode::EndpointMismatch: return "endpoint-mismatch";
    case ErrorCode::UndecidedComparison: return "undecided-comparison";
    case ErrorCode::WallMismatch: return "wall-mismatch";
    case ErrorCode::NoWallFound: return "no-wall-found";
    case ErrorCode::UsageError: return "usage-error";
    case ErrorCode::IoError: return "io-error";
  }
  return "unknown-error";
}

}
