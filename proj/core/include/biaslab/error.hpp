#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biaslab {

/// Failure categories raised by the library. Every throw site uses one of
/// these so callers (the CLI in particular) can map them to exit codes.
enum class Errc {
  NonSimplexPrior,
  NoUniqueDefault,
  ShapeMismatch,
  InvalidBelief,
  InvalidScheme,
  ZeroProbabilitySignal,
  OutOfRangeBias,
  OutOfRangeThreshold,
  InconsistentSplit,
  UnknownLabel,
  Infeasible,
  Numerical,
  Untestable,
  VerificationFailed,
  DefaultActionGap,
  InconsistentClassification,
  Timeout,
  DegenerateParameters,
  NothingTestable,
  NotSingleCrossing,
  InvalidBiasFunction,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace biaslab
