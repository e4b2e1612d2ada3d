#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expost {

enum class ErrorCode {
  NonStochasticJoint,
  NegativeProbability,
  EmptySupport,
  DimensionMismatch,
  NonFinitePayoff,
  InvalidStrategy,
  NotAnEquilibrium,
  InconsistentOutcomeMap,
  SizeCapExceeded,
  InvalidModel,
  AsymmetricUnsupported,
  AsymmetricBenevolentUnsupported,
  NonInvertibleConjecture,
  EqualParams,
  UnreachableStatistic,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Thrown by every operation whose contract names an error condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace expost
