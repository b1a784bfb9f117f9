#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "biaslab/design.hpp"
#include "biaslab/instance.hpp"

namespace biaslab {

/// c_a(state) = U(a0, state) - U(a, state) for a non-default action.
///
/// The agent strictly prefers a0 over a at belief mu iff c_a . mu > 0, so the
/// sign pattern of all gap vectors carves the simplex into the default
/// region, its boundary, and its exterior.
struct GapVector {
  std::size_t action = 0;
  std::vector<double> coeffs;

  double at(const Belief& belief) const { return dot(coeffs, belief.probs()); }
};

GapVector gap_vector(const Instance& instance, std::size_t action);
GapVector gap_vector(const Instance& instance, std::string_view action);

/// All gap vectors, in action order, skipping the default action.
std::vector<GapVector> gap_vectors(const Instance& instance);

/// min over non-default actions of c_a . belief: positive inside the default
/// region, zero on its boundary, negative outside.
double default_region_margin(const Instance& instance, const Belief& belief);

/// Right-hand side of the translated indifference hyperplane
/// c_a . mu = -tau / (1 - tau) * c_a . mu0. Always <= 0.
double indifference_offset(const Instance& instance, std::size_t action, double tau);

/// Whether the translated indifference hyperplane for `action` meets the
/// simplex (restricted to the prior's support).
bool translated_set_nonempty(const Instance& instance, std::size_t action, double tau);

/// Largest tau for which some translated indifference set is non-empty;
/// zero when the default action is never displaced.
double testable_range(const Instance& instance);

enum class Verdict { SingleSample, Finite, Untestable };

std::string_view to_string(Verdict v) noexcept;

struct Classification {
  Verdict verdict = Verdict::Untestable;
  double tau = 0.0;
  /// p* for SingleSample / Finite.
  std::optional<double> useful_mass;
  double tau_max = 0.0;
  std::vector<std::size_t> nonempty_actions;
  /// The LP design backing a testable verdict.
  std::optional<DesignResult> design;
};

/// Three-way testability verdict. Cross-checks the LP against the hyperplane
/// emptiness test and throws InconsistentClassification when they disagree.
Classification classify(const Instance& instance, double tau);

}  // namespace biaslab
