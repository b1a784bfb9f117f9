#include "biaslab/scheme.hpp"

#include <algorithm>
#include <cmath>

#include "biaslab/error.hpp"

namespace biaslab {

SignalingScheme::SignalingScheme(std::vector<std::string> signals, std::vector<std::vector<double>> cond)
    : signals_(std::move(signals)), cond_(std::move(cond)) {
  if (signals_.empty()) throw Error(Errc::InvalidScheme, "scheme needs at least one signal");
  if (cond_.size() != signals_.size()) throw Error(Errc::ShapeMismatch, "cond needs one row per signal");
  const std::size_t n_states = cond_.front().size();
  if (n_states == 0) throw Error(Errc::ShapeMismatch, "cond rows are empty");
  for (const auto& row : cond_) {
    if (row.size() != n_states) throw Error(Errc::ShapeMismatch, "cond rows differ in length");
    for (double p : row) {
      if (!std::isfinite(p) || p < -kTol) throw Error(Errc::InvalidScheme, "conditional probability out of range");
    }
  }
  for (std::size_t t = 0; t < n_states; ++t) {
    double sum = 0.0;
    for (const auto& row : cond_) sum += row[t];
    if (std::abs(sum - 1.0) > kTol) {
      throw Error(Errc::InvalidScheme, "signal distribution for state " + std::to_string(t) +
                                           " sums to " + std::to_string(sum));
    }
  }
  for (auto& row : cond_) {
    for (double& p : row) p = std::max(p, 0.0);
  }
}

std::size_t SignalingScheme::signal_index(std::string_view label) const {
  auto it = std::find(signals_.begin(), signals_.end(), label);
  if (it == signals_.end()) throw Error(Errc::UnknownLabel, "unknown signal '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - signals_.begin());
}

double SignalingScheme::signal_probability(const Belief& prior, std::size_t signal) const {
  return dot(cond_.at(signal), prior.probs());
}

std::vector<double> SignalingScheme::signal_probabilities(const Belief& prior) const {
  std::vector<double> out(num_signals());
  for (std::size_t s = 0; s < num_signals(); ++s) out[s] = signal_probability(prior, s);
  return out;
}

SignalingScheme uninformative_scheme(std::size_t num_states, std::vector<std::string> signals,
                                     std::vector<double> distribution) {
  std::vector<std::vector<double>> cond;
  for (double p : distribution) cond.emplace_back(num_states, p);
  return SignalingScheme(std::move(signals), std::move(cond));
}

SignalingScheme fully_informative_scheme(const Instance& instance) {
  const std::size_t n = instance.num_states();
  std::vector<std::vector<double>> cond(n, std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) cond[t][t] = 1.0;
  return SignalingScheme(instance.states(), std::move(cond));
}

Belief bayes_posterior(const Instance& instance, const SignalingScheme& scheme, std::size_t signal) {
  if (scheme.num_states() != instance.num_states()) {
    throw Error(Errc::ShapeMismatch, "scheme and instance disagree on the number of states");
  }
  if (signal >= scheme.num_signals()) throw Error(Errc::UnknownLabel, "signal index out of range");
  const Belief& prior = instance.prior();
  const double total = scheme.signal_probability(prior, signal);
  if (total <= kZeroSignal) {
    throw Error(Errc::ZeroProbabilitySignal, "signal '" + scheme.signals()[signal] + "' is never sent");
  }
  std::vector<double> post(instance.num_states());
  for (std::size_t t = 0; t < post.size(); ++t) post[t] = prior[t] * scheme.cond(signal, t) / total;
  return Belief(std::move(post));
}

Belief bayes_posterior(const Instance& instance, const SignalingScheme& scheme, std::string_view signal) {
  return bayes_posterior(instance, scheme, scheme.signal_index(signal));
}

double splitting_check(const Instance& instance, const SignalingScheme& scheme) {
  const Belief& prior = instance.prior();
  std::vector<double> acc(instance.num_states(), 0.0);
  for (std::size_t s = 0; s < scheme.num_signals(); ++s) {
    const double ps = scheme.signal_probability(prior, s);
    if (ps <= kZeroSignal) continue;
    const Belief post = bayes_posterior(instance, scheme, s);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += ps * post[t];
  }
  double residual = 0.0;
  for (std::size_t t = 0; t < acc.size(); ++t) residual = std::max(residual, std::abs(acc[t] - prior[t]));
  return residual;
}

SignalingScheme scheme_from_posteriors(const Instance& instance, std::span<const double> weights,
                                       std::span<const Belief> posteriors, std::vector<std::string> labels) {
  if (weights.size() != posteriors.size() || weights.empty()) {
    throw Error(Errc::ShapeMismatch, "need one weight per posterior");
  }
  if (!is_belief(weights)) throw Error(Errc::InconsistentSplit, "weights must form a probability vector");
  const std::size_t n = instance.num_states();
  for (const Belief& b : posteriors) {
    if (b.size() != n) throw Error(Errc::ShapeMismatch, "posterior dimension differs from instance");
  }
  if (labels.empty()) {
    for (std::size_t s = 0; s < weights.size(); ++s) labels.push_back("s" + std::to_string(s));
  }
  if (labels.size() != weights.size()) throw Error(Errc::ShapeMismatch, "need one label per posterior");

  const Belief& prior = instance.prior();
  for (std::size_t t = 0; t < n; ++t) {
    double avg = 0.0;
    for (std::size_t s = 0; s < weights.size(); ++s) avg += weights[s] * posteriors[s][t];
    if (std::abs(avg - prior[t]) > kTol) {
      throw Error(Errc::InconsistentSplit, "weighted posteriors miss the prior at state " +
                                               instance.states()[t] + " by " +
                                               std::to_string(std::abs(avg - prior[t])));
    }
  }

  std::vector<std::vector<double>> cond(weights.size(), std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < n; ++t) {
    double col = 0.0;
    for (std::size_t s = 0; s < weights.size(); ++s) {
      cond[s][t] = prior[t] > 0.0 ? weights[s] * posteriors[s][t] / prior[t] : weights[s];
      col += cond[s][t];
    }
    // Absorb the kTol-level slack of the split so each column sums to one.
    if (col > 0.0) {
      for (std::size_t s = 0; s < weights.size(); ++s) cond[s][t] /= col;
    }
  }
  return SignalingScheme(std::move(labels), std::move(cond));
}

}  // namespace biaslab
