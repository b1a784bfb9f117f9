#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biaslab/bias_model.hpp"
#include "biaslab/instance.hpp"
#include "biaslab/random.hpp"
#include "biaslab/scheme.hpp"

namespace biaslab {

/// Step of the coarse w / t scans used to detect multiple crossings.
inline constexpr double kScanStep = 0.01;

struct AssumptionCheck {
  explicit AssumptionCheck(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  /// First counterexample, when one was found.
  std::optional<Belief> posterior;
  std::optional<std::pair<double, double>> w_pair;
};

struct AssumptionReport {
  AssumptionCheck endpoints{"endpoints"};
  AssumptionCheck valid_output{"valid_output"};
  AssumptionCheck default_without_information{"default_without_information"};
  AssumptionCheck single_crossing{"single_crossing"};
  AssumptionCheck interior_stays_inside{"interior_stays_inside"};

  bool ok() const noexcept {
    return endpoints.passed && valid_output.passed && default_without_information.passed &&
           single_crossing.passed && interior_stays_inside.passed;
  }
  std::vector<const AssumptionCheck*> checks() const {
    return {&endpoints, &valid_output, &default_without_information, &single_crossing, &interior_stays_inside};
  }
};

/// Probes `phi` on `probes` random posteriors (plus the support vertices)
/// along a w-grid of step kScanStep. Failures are reported, not thrown.
AssumptionReport check_assumptions(const BiasFunction& phi, const Instance& instance, std::size_t probes, Rng& rng);

/// Bias level at which the biased belief of `posterior` enters the default
/// region, or nullopt if the posterior is already inside it.
/// Throws NotSingleCrossing when the coarse scan sees several sign changes.
std::optional<double> crossing_level(const BiasFunction& phi, const Instance& instance, const Belief& posterior);

/// Whether an agent with bias tau holding Bayesian posterior `mu` sits on the
/// indifference set between `action` and the default action, with both
/// weakly optimal.
bool generalized_membership(const BiasFunction& phi, const Instance& instance, const Belief& mu,
                            std::size_t action, double tau);

/// A finite-sample threshold scheme for a general bias model.
struct FiniteScheme {
  SignalingScheme scheme;
  /// The one signal whose tau-biased posterior lies on the default region's boundary.
  std::size_t boundary_signal = 0;
  Belief boundary_posterior;
  /// Probability of the boundary signal, p'.
  double useful_mass = 0.0;
  /// State whose vertex direction produced the boundary posterior.
  std::size_t vertex_state = 0;
  /// Mixing weight t of the boundary posterior t * e_state + (1 - t) * prior.
  double t = 0.0;
};

/// Walks from the prior toward each state vertex until the tau-biased belief
/// reaches the boundary of the default region, keeps the direction with the
/// largest boundary-signal mass, and splits the prior into that boundary
/// posterior plus point masses on the remaining states.
/// Throws Untestable when no direction reaches the boundary.
FiniteScheme construct_finite_scheme(const BiasFunction& phi, const Instance& instance, double tau);

/// Largest tau for which construct_finite_scheme succeeds, found by
/// bisection on the vertex test. Zero when nothing is testable.
double general_testable_range(const BiasFunction& phi, const Instance& instance);

}  // namespace biaslab
