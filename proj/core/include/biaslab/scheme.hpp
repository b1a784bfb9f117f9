#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biaslab/belief.hpp"
#include "biaslab/instance.hpp"

namespace biaslab {

/// Unconditional probabilities below this are treated as "never sent".
inline constexpr double kZeroSignal = 1e-12;

/// Conditional signal distributions pi(s | state).
///
/// Rows are signals, columns are states, matching the scheme file layout.
/// Every column is a probability distribution over signals.
class SignalingScheme {
 public:
  SignalingScheme() = default;
  SignalingScheme(std::vector<std::string> signals, std::vector<std::vector<double>> cond);

  std::size_t num_signals() const noexcept { return signals_.size(); }
  std::size_t num_states() const noexcept { return cond_.empty() ? 0 : cond_.front().size(); }
  const std::vector<std::string>& signals() const noexcept { return signals_; }
  const std::vector<std::vector<double>>& cond() const noexcept { return cond_; }
  double cond(std::size_t signal, std::size_t state) const { return cond_[signal][state]; }

  std::size_t signal_index(std::string_view label) const;

  /// pi(s) = sum_theta prior(theta) pi(s | theta).
  double signal_probability(const Belief& prior, std::size_t signal) const;
  std::vector<double> signal_probabilities(const Belief& prior) const;

 private:
  std::vector<std::string> signals_;
  std::vector<std::vector<double>> cond_;
};

/// Scheme where every state sends the same signal distribution.
SignalingScheme uninformative_scheme(std::size_t num_states, std::vector<std::string> signals,
                                     std::vector<double> distribution);

/// Scheme whose signal is the realized state.
SignalingScheme fully_informative_scheme(const Instance& instance);

/// Bayesian posterior after observing `signal`. Throws ZeroProbabilitySignal
/// when pi(signal) <= kZeroSignal.
Belief bayes_posterior(const Instance& instance, const SignalingScheme& scheme, std::size_t signal);
Belief bayes_posterior(const Instance& instance, const SignalingScheme& scheme, std::string_view signal);

/// || sum_s pi(s) mu_s - mu0 ||_inf over signals with positive probability.
double splitting_check(const Instance& instance, const SignalingScheme& scheme);

/// Builds the scheme that induces `posteriors` with unconditional
/// probabilities `weights`. Throws InconsistentSplit when the weighted
/// posteriors do not average to the prior within kTol.
SignalingScheme scheme_from_posteriors(const Instance& instance, std::span<const double> weights,
                                       std::span<const Belief> posteriors,
                                       std::vector<std::string> labels = {});

}  // namespace biaslab
