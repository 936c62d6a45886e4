#pragma once

#include <cstdint>
#include <random>

namespace mxpbf {

/// Splittable, value-semantic random stream.
///
/// Substreams are derived from the parent's key (never from engine state), so
/// `derive(r, pop)` yields the same stream no matter how much the parent has
/// been consumed or in which order siblings are created. This is what makes
/// replicate-level parallelism order-insensitive.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Child stream keyed by up to three indices (replicate, population, stage ...).
  Rng derive(std::uint64_t k1, std::uint64_t k2 = 0, std::uint64_t k3 = 0) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  double uniform(double lo, double hi);

  /// Unbiased uniform integer on [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal via the Marsaglia polar method.
  double normal();

 private:
  Rng(std::uint64_t key, int /*tag*/);

  std::uint64_t key_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer; also used to mix stream keys.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace mxpbf
