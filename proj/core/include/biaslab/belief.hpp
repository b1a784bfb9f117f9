#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace biaslab {

/// Shared comparison epsilon for simplex membership, constraint checks and
/// tie detection. The LP feasibility tolerance and the emptiness test in the
/// geometry module use the same value so their verdicts cannot disagree.
inline constexpr double kTol = 1e-9;

/// A probability vector over the states of an instance.
///
/// Entries are non-negative and sum to one within kTol. Tiny negative
/// round-off (>= -kTol) is clamped to zero on construction.
class Belief {
 public:
  Belief() = default;
  explicit Belief(std::vector<double> probs);

  /// Point mass on `state`.
  static Belief vertex(std::size_t dim, std::size_t state);
  static Belief uniform(std::size_t dim);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

  /// Largest absolute componentwise difference.
  double distance_inf(const Belief& other) const;

  friend bool operator==(const Belief&, const Belief&) = default;

 private:
  std::vector<double> probs_;
};

/// True when `probs` is a valid belief at tolerance kTol.
bool is_belief(std::span<const double> probs);

/// Linear biased belief w * prior + (1 - w) * posterior.
Belief biased_belief(const Belief& prior, const Belief& posterior, double w);

/// t * a + (1 - t) * b without validation of t beyond [0, 1].
Belief mix(const Belief& a, const Belief& b, double t);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace biaslab
