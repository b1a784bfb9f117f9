#include "biaslab/belief.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "biaslab/error.hpp"

namespace biaslab {

bool is_belief(std::span<const double> probs) {
  if (probs.empty()) return false;
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < -kTol) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= kTol;
}

Belief::Belief(std::vector<double> probs) : probs_(std::move(probs)) {
  if (!is_belief(probs_)) {
    std::ostringstream os;
    os << "not a probability vector (";
    for (std::size_t i = 0; i < probs_.size(); ++i) os << (i ? ", " : "") << probs_[i];
    os << ")";
    throw Error(Errc::InvalidBelief, os.str());
  }
  for (double& p : probs_) p = std::max(p, 0.0);
}

Belief Belief::vertex(std::size_t dim, std::size_t state) {
  std::vector<double> p(dim, 0.0);
  p.at(state) = 1.0;
  return Belief(std::move(p));
}

Belief Belief::uniform(std::size_t dim) {
  return Belief(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

double Belief::distance_inf(const Belief& other) const {
  if (other.size() != size()) throw Error(Errc::ShapeMismatch, "belief dimensions differ");
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, std::abs(probs_[i] - other.probs_[i]));
  return d;
}

Belief mix(const Belief& a, const Belief& b, double t) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "belief dimensions differ");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = t * a[i] + (1.0 - t) * b[i];
  return Belief(std::move(out));
}

Belief biased_belief(const Belief& prior, const Belief& posterior, double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw Error(Errc::OutOfRangeBias, "bias level must lie in [0, 1], got " + std::to_string(w));
  }
  return mix(prior, posterior, w);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "dot product of unequal lengths");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace biaslab
