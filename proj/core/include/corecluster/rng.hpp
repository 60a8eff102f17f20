#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace corecluster {

// Seedable generator with a fixed draw sequence. std::mt19937_64 has a
// standard-specified algorithm, and the Gaussian is a plain Box-Muller on
// top of it, so simulated datasets do not depend on the standard library's
// std::normal_distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent sub-stream, e.g. one per simulation block or repetition.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1)));
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal; consumes exactly two engine draws per value.
  double gaussian() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)) % bound;
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;

  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace corecluster
