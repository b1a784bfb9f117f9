#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "biaslab/bias_model.hpp"
#include "biaslab/design.hpp"
#include "biaslab/detector.hpp"
#include "biaslab/geometry.hpp"
#include "biaslab/instance.hpp"
#include "biaslab/scheme.hpp"

namespace biaslab::io {

using nlohmann::json;

/// {"states": [...], "actions": [...], "prior": [...], "utility": [[...], ...]}
RawInstance raw_instance_from_json(const json& j);
Instance instance_from_json(const json& j);
json to_json(const Instance& instance);

/// Reads and validates an instance file. Missing or unparsable files throw
/// Error(ParseError); invalid content throws the validation error.
Instance load_instance(const std::filesystem::path& path);

/// {"signals": [...], "cond": [[...], ...]}, rows are signals.
SignalingScheme scheme_from_json(const json& j);
json to_json(const SignalingScheme& scheme);

/// {"tau", "p_star", "sample_complexity" (number or "inf"), "scheme"}
json to_json(const DesignResult& result);

/// {"verdict", "p_star" (number or null), "tau_max", "nonempty_actions"}
json to_json(const Instance& instance, const Classification& c);

/// {"verdict": "geq" | "leq", "steps": n}
json to_json(const ThresholdVerdict& v);

/// {"lo", "hi", "queries", "censored"}
json to_json(const BiasInterval& interval);

/// {"bias_model": "linear"} or {"bias_model": "warped", "gamma": g}
BiasFunctionPtr bias_model_from_json(const json& j);
json to_json(const BiasFunction& phi);

/// Number, or the string "inf" for an unbounded value.
json number_or_inf(double v);

}  // namespace biaslab::io
