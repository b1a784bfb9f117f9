#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "biaslab/instance.hpp"
#include "biaslab/lp.hpp"
#include "biaslab/scheme.hpp"

namespace biaslab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Residual tolerance for re-checking a designed scheme.
inline constexpr double kDesignTol = 1e-8;

/// Signals whose unconditional probability is at or below this are ignored
/// by the belief-level indifference check in verify_design(); their LP rows
/// carry a factor pi(a) that makes the normalized check ill-conditioned.
inline constexpr double kNegligibleSignal = 1e-9;

/// The threshold-test LP together with bookkeeping about its row families.
struct DesignLp {
  LinearProgram lp;
  std::size_t num_states = 0;
  std::size_t num_actions = 0;
  std::size_t optimality_rows = 0;
  std::size_t indifference_rows = 0;
  std::size_t distribution_rows = 0;

  /// Column of pi(action | state).
  std::size_t var(std::size_t action, std::size_t state) const { return action * num_states + state; }
};

/// Optimal direct scheme for one threshold: signals are action
/// recommendations and every non-default recommendation leaves an agent with
/// bias exactly tau indifferent between it and the default action.
struct DesignResult {
  SignalingScheme scheme;
  double tau = 0.0;
  /// Probability of sending a non-default recommendation, p*.
  double useful_mass = 0.0;
  /// 1 / useful_mass; infinite when useful_mass is zero.
  double sample_complexity = kInfinity;
  /// Raw LP optimum before cleaning the scheme.
  double lp_value = 0.0;
};

/// Coefficient of pi(a | state) in the row comparing `a` against `other`
/// for an agent with bias `w`:
///   mu0(state) * [(1 - w) dU(a, other, state) + w * sum_s' mu0(s') dU(a, other, s')].
double preference_coefficient(const Instance& instance, std::size_t a, std::size_t other,
                              std::size_t state, double w);

/// Throws OutOfRangeThreshold unless 0 < tau < 1.
void require_threshold(double tau);

DesignLp build_lp(const Instance& instance, double tau);

/// Solves the threshold LP. Throws Untestable when no non-default
/// recommendation can be sent with positive probability.
DesignResult design_scheme(const Instance& instance, double tau);

struct DesignReport {
  double optimality = 0.0;
  double indifference = 0.0;
  double distribution = 0.0;
  /// |useful_mass - recomputed mass| and |sample_complexity - 1/mass|.
  double objective = 0.0;
  /// Largest |EU(a) - EU(a0)| or EU shortfall of the recommendation at the
  /// tau-biased belief, over signals with non-negligible probability.
  double belief_check = 0.0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Recomputes every constraint family of the design from scratch.
DesignReport check_design(const Instance& instance, double tau, const DesignResult& result);

/// check_design() that throws VerificationFailed naming the violated rows.
DesignReport verify_design(const Instance& instance, double tau, const DesignResult& result);

}  // namespace biaslab
