#pragma once

#include <memory>
#include <string>

#include "biaslab/belief.hpp"

namespace biaslab {

/// Map from (prior, Bayesian posterior, bias level) to the agent's belief.
///
/// Implementations must satisfy phi(prior, mu, 0) = mu and
/// phi(prior, mu, 1) = prior, return valid beliefs, and be safe to call
/// concurrently.
class BiasFunction {
 public:
  virtual ~BiasFunction() = default;
  virtual Belief apply(const Belief& prior, const Belief& posterior, double w) const = 0;
  virtual std::string name() const = 0;
};

using BiasFunctionPtr = std::shared_ptr<const BiasFunction>;

/// w * prior + (1 - w) * posterior.
class LinearBias final : public BiasFunction {
 public:
  Belief apply(const Belief& prior, const Belief& posterior, double w) const override;
  std::string name() const override { return "linear"; }
};

/// The linear model reparametrized by h(w) = w^gamma:
/// phi = (1 - w^gamma) * posterior + w^gamma * prior.
class WarpedLinear final : public BiasFunction {
 public:
  explicit WarpedLinear(double gamma);

  Belief apply(const Belief& prior, const Belief& posterior, double w) const override;
  std::string name() const override;
  double gamma() const noexcept { return gamma_; }

 private:
  double gamma_;
};

BiasFunctionPtr linear_bias();
BiasFunctionPtr warped_bias(double gamma);

/// Throws InvalidBiasFunction if `phi` misses the endpoint identities or
/// leaves the simplex on a fixed set of probe beliefs.
void require_bias_endpoints(const BiasFunction& phi);

}  // namespace biaslab
