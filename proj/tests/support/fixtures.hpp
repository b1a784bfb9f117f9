#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "biaslab/instance.hpp"
#include "biaslab/random.hpp"

namespace biaslab::testing {

/// States {Good, Bad}, actions {Active, Passive}; Active pays off iff the
/// belief in Good exceeds `threshold` (mu* in the closed form).
inline Instance two_state(double prior_good, double threshold) {
  return validate_instance({{"Good", "Bad"},
                            {"Active", "Passive"},
                            {prior_good, 1.0 - prior_good},
                            {{1.0 - threshold, -threshold}, {0.0, 0.0}}});
}

/// mu0 = (0.2, 0.8), U(Active) = (1, -1): indifference belief 0.5.
inline Instance two_state_reference() {
  return validate_instance({{"Good", "Bad"}, {"Active", "Passive"}, {0.2, 0.8}, {{1.0, -1.0}, {0.0, 0.0}}});
}

inline Instance symmetric_three_action() {
  return validate_instance(
      {{"G", "B"}, {"a0", "a1", "a2"}, {0.5, 0.5}, {{0.1, 0.1}, {1.0, -1.0}, {-1.0, 1.0}}});
}

/// Pay $1 to flip again for $1.40 on heads; fair coin 0.5 heads, unfair 0.9.
inline Instance coin() {
  return validate_instance(
      {{"fair", "unfair"}, {"Active", "Passive"}, {0.5, 0.5}, {{1.4 * 0.5 - 1.0, 1.4 * 0.9 - 1.0}, {0.0, 0.0}}});
}

/// Random instance with 2..5 states and actions, uniform payoffs in [-1, 1],
/// and a default action that wins at the prior by at least `min_margin`.
inline Instance random_instance(Rng& rng, double min_margin = 1e-3) {
  for (;;) {
    const std::size_t n_states = 2 + static_cast<std::size_t>(rng.uniform() * 4.0);
    const std::size_t n_actions = 2 + static_cast<std::size_t>(rng.uniform() * 4.0);
    RawInstance raw;
    for (std::size_t s = 0; s < n_states; ++s) raw.states.push_back("s" + std::to_string(s));
    for (std::size_t a = 0; a < n_actions; ++a) raw.actions.push_back("a" + std::to_string(a));
    raw.prior = rng.simplex_point(n_states);
    raw.utility.assign(n_actions, std::vector<double>(n_states));
    for (auto& row : raw.utility) {
      for (double& u : row) u = 2.0 * rng.uniform() - 1.0;
    }
    try {
      Instance inst = validate_instance(raw);
      if (inst.prior_margin() >= min_margin) return inst;
    } catch (...) {
    }
  }
}

/// Closed-form optimum for the two-state, two-action family with
/// 0 < mu0 < mu* < 1 and tau < (1 - mu*) / (1 - mu0).
struct TwoStateClosedForm {
  double useful_mass;
  double sample_complexity;
  double signal_posterior;
  double tau_max;
};

inline TwoStateClosedForm two_state_closed_form(double mu0, double mu_star, double tau) {
  TwoStateClosedForm c{};
  c.sample_complexity = (mu_star - mu0) / (mu0 * (1.0 - tau)) + 1.0;
  c.useful_mass = mu0 * (1.0 - tau) / (mu_star - tau * mu0);
  c.signal_posterior = (mu_star - tau * mu0) / (1.0 - tau);
  c.tau_max = (1.0 - mu_star) / (1.0 - mu0);
  return c;
}

}  // namespace biaslab::testing
