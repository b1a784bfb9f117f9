#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "biaslab/agent.hpp"
#include "biaslab/design.hpp"
#include "biaslab/general_bias.hpp"
#include "biaslab/instance.hpp"
#include "biaslab/random.hpp"
#include "biaslab/scheme.hpp"

namespace biaslab {

/// Failure probability used to size the default per-test step budget.
inline constexpr double kDefaultTimeoutDelta = 1e-9;

/// Outcome of one threshold test: GEq means w >= tau, LEq means w <= tau.
enum class ThresholdOutcome { GEq, LEq };

std::string_view to_string(ThresholdOutcome o) noexcept;

struct ThresholdVerdict {
  ThresholdOutcome verdict = ThresholdOutcome::GEq;
  /// Episodes until the first useful signal, inclusive. Always >= 1.
  std::size_t steps = 0;
  std::vector<Episode> trace;
};

/// A constant scheme together with which of its signals decide the test.
struct TestPlan {
  SignalingScheme scheme;
  std::vector<bool> useful;
  double useful_mass = 0.0;
  double tau = 0.0;
};

TestPlan plan_from_design(const Instance& instance, const DesignResult& design);
TestPlan plan_from_finite(const FiniteScheme& finite, double tau);

/// LP-optimal plan for the linear model, constructive plan for any other
/// bias function. Throws Untestable.
TestPlan make_plan(const Instance& instance, double tau, const BiasFunction& phi);

/// Largest testable threshold for the given bias model.
double testable_range(const Instance& instance, const BiasFunction& phi);

/// Runs episodes until a useful signal arrives and reads the verdict off the
/// agent's action. `max_steps == 0` selects the horizon for failure
/// probability kDefaultTimeoutDelta. Throws Timeout.
ThresholdVerdict threshold_test(const Instance& instance, const TestPlan& plan, const BiasedAgent& agent, Rng& rng,
                                std::size_t max_steps = 0, bool record_trace = false);

/// Threshold test on the plan designed for `agent`'s bias model at `tau`.
ThresholdVerdict threshold_test(const Instance& instance, double tau, const BiasedAgent& agent, Rng& rng,
                                std::size_t max_steps = 0, bool record_trace = false);

struct ConfidenceHorizon {
  /// Smallest t with (1 - p)^t <= delta.
  std::size_t exact = 0;
  /// ceil((1 / p) * ln(1 / delta)).
  std::size_t bound = 0;
};

ConfidenceHorizon steps_for_confidence(double useful_mass, double delta);

struct SampleComplexityEstimate {
  double mean = 0.0;
  /// Standard error of the mean; unavailable for a single trial.
  std::optional<double> std_error;
  std::size_t trials = 0;
  double useful_mass = 0.0;
  /// 1 / useful_mass.
  double theoretical = 0.0;
};

/// Mean number of steps over `trials` independent threshold tests, each on
/// its own random stream derived from `rng`.
SampleComplexityEstimate empirical_sample_complexity(const Instance& instance, const TestPlan& plan,
                                                     const BiasedAgent& agent, Rng& rng, std::size_t trials);
SampleComplexityEstimate empirical_sample_complexity(const Instance& instance, double tau, const BiasedAgent& agent,
                                                     Rng& rng, std::size_t trials);

struct BiasInterval {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t queries = 0;
  /// The agent answered GEq at the largest testable threshold, so only the
  /// lower end is informative.
  bool censored = false;
  double tau_max = 0.0;
};

/// Designs (and caches) one plan per threshold.
class PlanCache {
 public:
  PlanCache(const Instance& instance, BiasFunctionPtr phi);

  const TestPlan& plan(double tau);
  double tau_max() const noexcept { return tau_max_; }

 private:
  const Instance* instance_;
  BiasFunctionPtr phi_;
  double tau_max_;
  std::map<double, TestPlan> plans_;
};

/// Binary search for the agent's bias over the testable range [0, tau_max].
/// If no query answered LEq, tau_max itself is tested last; GEq there yields
/// the censored interval [tau_max, 1]. Throws NothingTestable when the range
/// is empty.
BiasInterval estimate_bias(const Instance& instance, const BiasedAgent& agent, double epsilon, Rng& rng,
                           std::size_t max_steps_per_test = 0);

}  // namespace biaslab
