#include "biaslab/bias_model.hpp"

#include <cmath>
#include <sstream>

#include "biaslab/error.hpp"

namespace biaslab {

Belief LinearBias::apply(const Belief& prior, const Belief& posterior, double w) const {
  return biased_belief(prior, posterior, w);
}

WarpedLinear::WarpedLinear(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(Errc::InvalidBiasFunction, "warped exponent must be positive");
  }
}

Belief WarpedLinear::apply(const Belief& prior, const Belief& posterior, double w) const {
  if (!(w >= 0.0 && w <= 1.0)) throw Error(Errc::OutOfRangeBias, "bias level must lie in [0, 1]");
  return biased_belief(prior, posterior, std::pow(w, gamma_));
}

std::string WarpedLinear::name() const {
  std::ostringstream os;
  os << "warped(gamma=" << gamma_ << ")";
  return os.str();
}

BiasFunctionPtr linear_bias() {
  static const BiasFunctionPtr shared = std::make_shared<const LinearBias>();
  return shared;
}

BiasFunctionPtr warped_bias(double gamma) {
  return std::make_shared<const WarpedLinear>(gamma);
}

void require_bias_endpoints(const BiasFunction& phi) {
  const Belief probes[] = {
      Belief({0.5, 0.5}), Belief({0.2, 0.8}), Belief({1.0, 0.0}), Belief({0.0, 1.0}),
      Belief({0.2, 0.3, 0.5}), Belief({1.0, 0.0, 0.0}), Belief({0.6, 0.1, 0.3}),
  };
  for (const Belief& prior : probes) {
    for (const Belief& post : probes) {
      if (post.size() != prior.size()) continue;
      if (phi.apply(prior, post, 0.0).distance_inf(post) > kTol ||
          phi.apply(prior, post, 1.0).distance_inf(prior) > kTol) {
        throw Error(Errc::InvalidBiasFunction, phi.name() + " violates the w = 0 / w = 1 endpoint identities");
      }
    }
  }
}

}  // namespace biaslab
