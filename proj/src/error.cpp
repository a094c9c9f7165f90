#include "transdom/error.hpp"

namespace transdom {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::NotPaleyBase: return "NotPaleyBase";
    case ErrorCode::EvenOrderCount: return "EvenOrderCount";
    case ErrorCode::MismatchedDomains: return "MismatchedDomains";
    case ErrorCode::NotTwoColored: return "NotTwoColored";
    case ErrorCode::NotTransitivelyColored: return "NotTransitivelyColored";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::InfeasibleWeights: return "InfeasibleWeights";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace transdom
