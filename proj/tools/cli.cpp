#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "biaslab/biaslab.hpp"
#include "biaslab/io.hpp"

namespace biaslab::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;

struct AgentOptions {
  double w = 0.0;
  std::string bias_model = "linear";
  std::optional<double> gamma;
  std::string tiebreak = "prefer-default";
  std::optional<std::uint64_t> seed;
};

struct Options {
  std::string instance;
  double tau = 0.0;
  std::size_t trials = 10000;
  double epsilon = 0.01;
  std::string tau_grid;
  std::string format = "csv";
  AgentOptions agent;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Untestable:
    case Errc::NothingTestable:
      return kExitUntestable;
    case Errc::ParseError:
    case Errc::NonSimplexPrior:
    case Errc::NoUniqueDefault:
    case Errc::ShapeMismatch:
    case Errc::InvalidBelief:
    case Errc::InvalidScheme:
    case Errc::UnknownLabel:
    case Errc::OutOfRangeBias:
    case Errc::OutOfRangeThreshold:
    case Errc::DegenerateParameters:
    case Errc::InvalidBiasFunction:
      return kExitInvalidInput;
    default:
      return kExitFailure;
  }
}

TieBreak parse_tiebreak(const std::string& s) {
  if (s == "prefer-default") return TieBreak::PreferDefault;
  if (s == "prefer-non-default") return TieBreak::PreferNonDefault;
  if (s == "fixed-order") return TieBreak::FixedOrder;
  throw UsageError("unknown tiebreak '" + s + "'");
}

BiasFunctionPtr make_bias(const AgentOptions& o) {
  json cfg{{"bias_model", o.bias_model}};
  if (o.bias_model == "warped") {
    if (!o.gamma) throw UsageError("--bias-model warped requires --gamma");
    cfg["gamma"] = *o.gamma;
  } else if (o.bias_model != "linear") {
    throw UsageError("unknown bias model '" + o.bias_model + "'");
  }
  return io::bias_model_from_json(cfg);
}

std::uint64_t resolve_seed(const AgentOptions& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("BIASLAB_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("BIASLAB_SEED must be an unsigned integer");
    return v;
  }
  return kDefaultSeed;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.empty()) {
    for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
    return grid;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      grid.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --tau-grid entry '" + item + "'");
    }
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::string fmt_number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_design(const Options& o, std::ostream& out) {
  const Instance inst = io::load_instance(o.instance);
  print_json(out, io::to_json(design_scheme(inst, o.tau)));
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = io::load_instance(o.instance);
  const Classification c = classify(inst, o.tau);
  print_json(out, io::to_json(inst, c));
  if (c.verdict == Verdict::Untestable) {
    err << "untestable: no threshold test exists at tau = " << o.tau << '\n';
    return kExitUntestable;
  }
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Instance inst = io::load_instance(o.instance);
  const BiasedAgent agent(o.agent.w, make_bias(o.agent), parse_tiebreak(o.agent.tiebreak));
  Rng rng(resolve_seed(o.agent));
  const SampleComplexityEstimate est = empirical_sample_complexity(inst, o.tau, agent, rng, o.trials);
  json j{{"tau", o.tau},
         {"w", o.agent.w},
         {"trials", est.trials},
         {"mean", est.mean},
         {"stderr", est.std_error ? json(*est.std_error) : json(nullptr)},
         {"theoretical", est.theoretical},
         {"p_star", est.useful_mass},
         {"bias", io::to_json(agent.bias())}};
  print_json(out, j);
  return kExitOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  const Instance inst = io::load_instance(o.instance);
  const BiasedAgent agent(o.agent.w, make_bias(o.agent), parse_tiebreak(o.agent.tiebreak));
  Rng rng(resolve_seed(o.agent));
  print_json(out, io::to_json(estimate_bias(inst, agent, o.epsilon, rng)));
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  const Instance inst = io::load_instance(o.instance);
  const std::vector<double> grid = parse_grid(o.tau_grid);

  json rows = json::array();
  if (o.format == "csv") out << "tau,p_star,sample_complexity,verdict\n";
  for (double tau : grid) {
    const Classification c = classify(inst, tau);
    const double p = c.useful_mass.value_or(0.0);
    const double complexity = p > 0.0 ? 1.0 / p : kInfinity;
    if (o.format == "csv") {
      out << fmt_number(tau) << ',' << fmt_number(p) << ',' << fmt_number(complexity) << ','
          << to_string(c.verdict) << '\n';
    } else {
      rows.push_back(json{{"tau", tau},
                          {"p_star", p},
                          {"sample_complexity", io::number_or_inf(complexity)},
                          {"verdict", std::string(to_string(c.verdict))}});
    }
  }
  if (o.format == "json") print_json(out, rows);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design and run threshold tests for a biased belief-updating agent", "biaslab"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "Instance JSON file")->required();
  };
  auto add_agent = [&](CLI::App* sub) {
    sub->add_option("--w", o.agent.w, "Hidden bias level of the simulated agent")->required();
    sub->add_option("--seed", o.agent.seed, "Random seed (falls back to BIASLAB_SEED, then 42)");
    sub->add_option("--bias-model", o.agent.bias_model, "linear | warped")->capture_default_str();
    sub->add_option("--gamma", o.agent.gamma, "Exponent of the warped bias model");
    sub->add_option("--tiebreak", o.agent.tiebreak, "prefer-default | prefer-non-default | fixed-order")
        ->capture_default_str();
  };

  CLI::App* design = app.add_subcommand("design", "Solve the threshold LP and print the optimal scheme");
  add_instance(design);
  design->add_option("--tau", o.tau, "Threshold in (0, 1)")->required();

  CLI::App* cls = app.add_subcommand("classify", "Single-sample / finite / untestable verdict");
  add_instance(cls);
  cls->add_option("--tau", o.tau, "Threshold in (0, 1)")->required();

  CLI::App* sim = app.add_subcommand("simulate", "Empirical sample complexity against a simulated agent");
  add_instance(sim);
  sim->add_option("--tau", o.tau, "Threshold in (0, 1)")->required();
  sim->add_option("--trials", o.trials, "Number of threshold tests")->capture_default_str();
  add_agent(sim);

  CLI::App* est = app.add_subcommand("estimate", "Binary-search the agent's bias level");
  add_instance(est);
  est->add_option("--epsilon", o.epsilon, "Target interval width")->capture_default_str();
  add_agent(est);

  CLI::App* sweep = app.add_subcommand("sweep", "Classify a grid of thresholds");
  add_instance(sweep);
  sweep->add_option("--tau-grid", o.tau_grid, "Comma-separated thresholds (default 0.01..0.99)");
  sweep->add_option("--format", o.format, "csv | json")->capture_default_str();

  std::vector<std::string> argv_storage{"biaslab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (design->parsed()) return cmd_design(o, out);
    if (cls->parsed()) return cmd_classify(o, out, err);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (est->parsed()) return cmd_estimate(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.exit_code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace biaslab::cli
