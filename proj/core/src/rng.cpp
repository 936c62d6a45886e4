#include "mxpbf/rng.hpp"

#include <cmath>
#include <limits>

namespace mxpbf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : Rng(splitmix64(seed), 0) {}

Rng::Rng(std::uint64_t key, int) : key_(key), engine_(key) {}

Rng Rng::derive(std::uint64_t k1, std::uint64_t k2, std::uint64_t k3) const {
  std::uint64_t h = key_;
  h = splitmix64(h ^ splitmix64(k1 ^ 0x517cc1b727220a95ULL));
  h = splitmix64(h ^ splitmix64(k2 ^ 0x6c62272e07bb0142ULL));
  h = splitmix64(h ^ splitmix64(k3 ^ 0xd6e8feb86659fd93ULL));
  return Rng(h, 0);
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

}  // namespace mxpbf
