#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transdom {

enum class ErrorCode {
  // tournament construction
  MissingPair,
  DuplicatePair,
  SelfLoop,
  OutOfRange,
  // input handling
  ParseError,
  InvalidArgument,
  DimensionMismatch,
  GeneralPositionViolation,
  // solver limits
  InstanceTooLarge,
  BudgetExhausted,
  NonConvergence,
  // number theory / constructions
  NotPrime,
  WrongResidueClass,
  NotPaleyBase,
  EvenOrderCount,
  MismatchedDomains,
  NotTwoColored,
  NotTransitivelyColored,
  VertexNotFound,
  InfeasibleWeights,
  // a checked postcondition failed
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace transdom
