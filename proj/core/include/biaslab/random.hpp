#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace biaslab {

/// Seedable deterministic random source.
///
/// Draws are derived from raw 64-bit engine output rather than the standard
/// distributions, so a given seed yields identical streams across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(mix(seed)) {}

  /// Independent stream `index` derived from `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Index drawn with probability proportional to `weights`.
  std::size_t categorical(std::span<const double> weights);
  /// Uniform point on the probability simplex of dimension `dim`.
  std::vector<double> simplex_point(std::size_t dim);

 private:
  static std::uint64_t mix(std::uint64_t x);

  std::mt19937_64 engine_;
};

}  // namespace biaslab
