#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biaslab/belief.hpp"

namespace biaslab {

/// Unvalidated problem description, as read from an instance file.
struct RawInstance {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<double> prior;
  /// utility[action][state]
  std::vector<std::vector<double>> utility;
};

/// A validated decision problem: states, actions, common prior and payoffs.
///
/// Construction goes through validate_instance(), which enforces that a
/// single action is strictly optimal at the prior. That action is the
/// default action and is cached together with its margin over the runner-up.
class Instance {
 public:
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_actions() const noexcept { return actions_.size(); }

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& actions() const noexcept { return actions_; }
  const Belief& prior() const noexcept { return prior_; }
  double utility(std::size_t action, std::size_t state) const { return utility_[action][state]; }
  std::span<const double> utility_row(std::size_t action) const { return utility_[action]; }

  std::size_t default_action() const noexcept { return default_action_; }
  double prior_margin() const noexcept { return prior_margin_; }

  /// States with positive prior mass. Zero-prior states never occur, so
  /// geometric tests range over this support only.
  const std::vector<std::size_t>& support() const noexcept { return support_; }

  std::size_t action_index(std::string_view label) const;
  std::size_t state_index(std::string_view label) const;

  RawInstance raw() const;

 private:
  friend Instance validate_instance(const RawInstance& raw);
  Instance() = default;

  std::vector<std::string> states_;
  std::vector<std::string> actions_;
  Belief prior_;
  std::vector<std::vector<double>> utility_;
  std::size_t default_action_ = 0;
  double prior_margin_ = 0.0;
  std::vector<std::size_t> support_;
};

/// Checks shapes, the prior, and uniqueness of the optimal action at the prior.
/// Throws Error with ShapeMismatch, NonSimplexPrior or NoUniqueDefault.
Instance validate_instance(const RawInstance& raw);

enum class TieBreak {
  PreferDefault,
  PreferNonDefault,
  FixedOrder,
};

struct BestResponse {
  std::size_t action = 0;
  double expected_utility = 0.0;
  /// Two or more actions lie within kTol of the maximum.
  bool tie = false;
};

double expected_utility(const Instance& instance, std::size_t action, const Belief& belief);

BestResponse best_response(const Instance& instance, const Belief& belief,
                           TieBreak tiebreak = TieBreak::PreferDefault);

}  // namespace biaslab
