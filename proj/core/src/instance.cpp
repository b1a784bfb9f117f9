#include "biaslab/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "biaslab/error.hpp"

namespace biaslab {

namespace {

void require_unique(const std::vector<std::string>& labels, std::string_view what) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw Error(Errc::ShapeMismatch, std::string(what) + " labels must be distinct");
  }
}

}  // namespace

Instance validate_instance(const RawInstance& raw) {
  const std::size_t n_states = raw.states.size();
  const std::size_t n_actions = raw.actions.size();
  if (n_states < 2) throw Error(Errc::ShapeMismatch, "need at least two states");
  if (n_actions < 2) throw Error(Errc::ShapeMismatch, "need at least two actions");
  require_unique(raw.states, "state");
  require_unique(raw.actions, "action");
  if (raw.prior.size() != n_states) {
    throw Error(Errc::ShapeMismatch, "prior has " + std::to_string(raw.prior.size()) +
                                         " entries for " + std::to_string(n_states) + " states");
  }
  if (raw.utility.size() != n_actions) {
    throw Error(Errc::ShapeMismatch, "utility needs one row per action");
  }
  for (const auto& row : raw.utility) {
    if (row.size() != n_states) throw Error(Errc::ShapeMismatch, "utility rows need one entry per state");
    for (double u : row) {
      if (!std::isfinite(u)) throw Error(Errc::ShapeMismatch, "utility entries must be finite");
    }
  }
  if (!is_belief(raw.prior)) throw Error(Errc::NonSimplexPrior, "prior must be non-negative and sum to 1");

  Instance inst;
  inst.states_ = raw.states;
  inst.actions_ = raw.actions;
  inst.prior_ = Belief(raw.prior);
  inst.utility_ = raw.utility;
  for (std::size_t s = 0; s < n_states; ++s) {
    if (inst.prior_[s] > 0.0) inst.support_.push_back(s);
  }

  std::vector<double> eu(n_actions);
  for (std::size_t a = 0; a < n_actions; ++a) eu[a] = dot(inst.utility_[a], inst.prior_.probs());
  const auto best = static_cast<std::size_t>(std::max_element(eu.begin(), eu.end()) - eu.begin());
  double runner_up = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n_actions; ++a) {
    if (a != best) runner_up = std::max(runner_up, eu[a]);
  }
  const double margin = eu[best] - runner_up;
  if (margin <= kTol) {
    throw Error(Errc::NoUniqueDefault, "no action is strictly optimal at the prior (margin " +
                                           std::to_string(margin) + ")");
  }
  inst.default_action_ = best;
  inst.prior_margin_ = margin;
  return inst;
}

std::size_t Instance::action_index(std::string_view label) const {
  auto it = std::find(actions_.begin(), actions_.end(), label);
  if (it == actions_.end()) throw Error(Errc::UnknownLabel, "unknown action '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - actions_.begin());
}

std::size_t Instance::state_index(std::string_view label) const {
  auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) throw Error(Errc::UnknownLabel, "unknown state '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - states_.begin());
}

RawInstance Instance::raw() const {
  return RawInstance{states_, actions_, std::vector<double>(prior_.probs().begin(), prior_.probs().end()),
                     utility_};
}

double expected_utility(const Instance& instance, std::size_t action, const Belief& belief) {
  if (belief.size() != instance.num_states()) throw Error(Errc::ShapeMismatch, "belief/instance dimension");
  return dot(instance.utility_row(action), belief.probs());
}

BestResponse best_response(const Instance& instance, const Belief& belief, TieBreak tiebreak) {
  const std::size_t n = instance.num_actions();
  std::vector<double> eu(n);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    eu[a] = expected_utility(instance, a, belief);
    best = std::max(best, eu[a]);
  }
  std::vector<std::size_t> optimal;
  for (std::size_t a = 0; a < n; ++a) {
    if (eu[a] >= best - kTol) optimal.push_back(a);
  }

  const std::size_t a0 = instance.default_action();
  std::size_t pick = optimal.front();
  if (optimal.size() > 1) {
    const bool has_default = std::find(optimal.begin(), optimal.end(), a0) != optimal.end();
    switch (tiebreak) {
      case TieBreak::PreferDefault:
        if (has_default) pick = a0;
        break;
      case TieBreak::PreferNonDefault:
        for (std::size_t a : optimal) {
          if (a != a0) {
            pick = a;
            break;
          }
        }
        break;
      case TieBreak::FixedOrder:
        break;
    }
  }
  return BestResponse{pick, eu[pick], optimal.size() > 1};
}

}  // namespace biaslab
