#pragma once

#include <cstdint>
#include <random>

namespace pettykit {

/// Deterministic random stream. Doubles and gaussians are produced from the
/// raw mt19937_64 bits directly (not through std distributions) so that a
/// given seed yields the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0,1) with 53 random bits.
  double uniform();

  /// Uniform in [a,b).
  double uniform(double a, double b);

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian();

  /// Integer in [0,n).
  std::uint64_t below(std::uint64_t n);

  /// Statistically independent stream derived from (seed, index).
  Rng substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 step; used for seed mixing and substream derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace pettykit
