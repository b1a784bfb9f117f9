#include "biaslab/agent.hpp"

#include <cmath>

#include "biaslab/error.hpp"

namespace biaslab {

BiasedAgent::BiasedAgent(double w, BiasFunctionPtr bias, TieBreak tiebreak)
    : w_(w), bias_(std::move(bias)), tiebreak_(tiebreak) {
  if (!(w >= 0.0 && w <= 1.0)) throw Error(Errc::OutOfRangeBias, "bias level must lie in [0, 1]");
  if (!bias_) throw Error(Errc::InvalidBiasFunction, "agent needs a bias function");
  require_bias_endpoints(*bias_);
}

std::size_t agent_act(const BiasedAgent& agent, const Instance& instance, const SignalingScheme& scheme,
                      std::size_t signal) {
  const Belief posterior = bayes_posterior(instance, scheme, signal);
  const Belief belief = agent.bias().apply(instance.prior(), posterior, agent.w());
  return best_response(instance, belief, agent.tiebreak()).action;
}

int preference_sign(const Instance& instance, const SignalingScheme& scheme, std::size_t signal,
                    std::size_t a1, std::size_t a2, double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw Error(Errc::OutOfRangeBias, "bias level must lie in [0, 1]");
  if (scheme.signal_probability(instance.prior(), signal) <= kZeroSignal) {
    throw Error(Errc::ZeroProbabilitySignal, "signal '" + scheme.signals()[signal] + "' is never sent");
  }
  const Belief& prior = instance.prior();
  double at_prior = 0.0;
  for (std::size_t s = 0; s < instance.num_states(); ++s) {
    at_prior += prior[s] * (instance.utility(a1, s) - instance.utility(a2, s));
  }
  double value = 0.0;
  for (std::size_t s = 0; s < instance.num_states(); ++s) {
    const double gap = instance.utility(a1, s) - instance.utility(a2, s);
    value += scheme.cond(signal, s) * prior[s] * ((1.0 - w) * gap + w * at_prior);
  }
  if (value > kTol) return 1;
  if (value < -kTol) return -1;
  return 0;
}

Episode sample_episode(const BiasedAgent& agent, const Instance& instance, const SignalingScheme& scheme, Rng& rng) {
  Episode e;
  e.state = rng.categorical(instance.prior().probs());
  std::vector<double> column(scheme.num_signals());
  for (std::size_t s = 0; s < column.size(); ++s) column[s] = scheme.cond(s, e.state);
  e.signal = rng.categorical(column);
  e.action = agent_act(agent, instance, scheme, e.signal);
  return e;
}

}  // namespace biaslab
