#include "biaslab/error.hpp"

namespace biaslab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonSimplexPrior: return "NonSimplexPrior";
    case Errc::NoUniqueDefault: return "NoUniqueDefault";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidBelief: return "InvalidBelief";
    case Errc::InvalidScheme: return "InvalidScheme";
    case Errc::ZeroProbabilitySignal: return "ZeroProbabilitySignal";
    case Errc::OutOfRangeBias: return "OutOfRangeBias";
    case Errc::OutOfRangeThreshold: return "OutOfRangeThreshold";
    case Errc::InconsistentSplit: return "InconsistentSplit";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Numerical: return "Numerical";
    case Errc::Untestable: return "Untestable";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::DefaultActionGap: return "DefaultActionGap";
    case Errc::InconsistentClassification: return "InconsistentClassification";
    case Errc::Timeout: return "Timeout";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::NothingTestable: return "NothingTestable";
    case Errc::NotSingleCrossing: return "NotSingleCrossing";
    case Errc::InvalidBiasFunction: return "InvalidBiasFunction";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace biaslab
