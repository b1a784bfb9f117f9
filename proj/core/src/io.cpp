#include "biaslab/io.hpp"

#include <cmath>
#include <fstream>

#include "biaslab/error.hpp"

namespace biaslab::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

RawInstance raw_instance_from_json(const json& j) {
  RawInstance raw;
  raw.states = field<std::vector<std::string>>(j, "states");
  raw.actions = field<std::vector<std::string>>(j, "actions");
  raw.prior = field<std::vector<double>>(j, "prior");
  raw.utility = field<std::vector<std::vector<double>>>(j, "utility");
  return raw;
}

Instance instance_from_json(const json& j) { return validate_instance(raw_instance_from_json(j)); }

json to_json(const Instance& instance) {
  const RawInstance raw = instance.raw();
  return json{{"states", raw.states}, {"actions", raw.actions}, {"prior", raw.prior}, {"utility", raw.utility}};
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open instance file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, "invalid JSON in '" + path.string() + "': " + e.what());
  }
  return instance_from_json(j);
}

SignalingScheme scheme_from_json(const json& j) {
  return SignalingScheme(field<std::vector<std::string>>(j, "signals"),
                         field<std::vector<std::vector<double>>>(j, "cond"));
}

json to_json(const SignalingScheme& scheme) {
  return json{{"signals", scheme.signals()}, {"cond", scheme.cond()}};
}

json number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

json to_json(const DesignResult& result) {
  return json{{"tau", result.tau},
              {"p_star", result.useful_mass},
              {"sample_complexity", number_or_inf(result.sample_complexity)},
              {"scheme", to_json(result.scheme)}};
}

json to_json(const Instance& instance, const Classification& c) {
  json labels = json::array();
  for (std::size_t a : c.nonempty_actions) labels.push_back(instance.actions()[a]);
  return json{{"verdict", std::string(to_string(c.verdict))},
              {"p_star", c.useful_mass ? json(*c.useful_mass) : json(nullptr)},
              {"tau_max", c.tau_max},
              {"nonempty_actions", labels}};
}

json to_json(const ThresholdVerdict& v) {
  return json{{"verdict", std::string(to_string(v.verdict))}, {"steps", v.steps}};
}

json to_json(const BiasInterval& interval) {
  return json{{"lo", interval.lo}, {"hi", interval.hi}, {"queries", interval.queries}, {"censored", interval.censored}};
}

BiasFunctionPtr bias_model_from_json(const json& j) {
  const auto model = field<std::string>(j, "bias_model");
  if (model == "linear") return linear_bias();
  if (model == "warped") return warped_bias(field<double>(j, "gamma"));
  throw Error(Errc::ParseError, "unknown bias_model '" + model + "'");
}

json to_json(const BiasFunction& phi) {
  if (const auto* w = dynamic_cast<const WarpedLinear*>(&phi)) return json{{"bias_model", "warped"}, {"gamma", w->gamma()}};
  return json{{"bias_model", phi.name()}};
}

}  // namespace biaslab::io
