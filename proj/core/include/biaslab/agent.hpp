#pragma once

#include <cstddef>

#include "biaslab/bias_model.hpp"
#include "biaslab/instance.hpp"
#include "biaslab/random.hpp"
#include "biaslab/scheme.hpp"

namespace biaslab {

/// Simulated agent with a hidden bias level.
///
/// The agent knows the scheme, forms the exact Bayesian posterior, distorts
/// it through its bias function at level w, and best-responds.
class BiasedAgent {
 public:
  explicit BiasedAgent(double w, BiasFunctionPtr bias = linear_bias(),
                       TieBreak tiebreak = TieBreak::PreferDefault);

  double w() const noexcept { return w_; }
  const BiasFunction& bias() const noexcept { return *bias_; }
  const BiasFunctionPtr& bias_ptr() const noexcept { return bias_; }
  TieBreak tiebreak() const noexcept { return tiebreak_; }

 private:
  double w_;
  BiasFunctionPtr bias_;
  TieBreak tiebreak_;
};

std::size_t agent_act(const BiasedAgent& agent, const Instance& instance, const SignalingScheme& scheme,
                      std::size_t signal);

/// Sign of the closed-form preference of a1 over a2 after `signal`, for the
/// linear model at bias w. Evaluated directly on the conditionals without
/// forming the posterior; +1 means a1 is strictly preferred, 0 is a tie
/// within kTol.
int preference_sign(const Instance& instance, const SignalingScheme& scheme, std::size_t signal,
                    std::size_t a1, std::size_t a2, double w);

struct Episode {
  std::size_t state = 0;
  std::size_t signal = 0;
  std::size_t action = 0;
};

/// Draws a state from the prior, a signal from the scheme, then the agent's action.
Episode sample_episode(const BiasedAgent& agent, const Instance& instance, const SignalingScheme& scheme, Rng& rng);

}  // namespace biaslab
