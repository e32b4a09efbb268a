#pragma once

#include <cstdint>
#include <utility>

namespace bartree {

/// splitmix64 (Vigna): 64 bits of state, passes BigCrush, and its output
/// finalizer doubles as the seed-derivation mixer. All randomness in this
/// project flows through this engine so that identical seeds give identical
/// streams on every platform.
class SplitMix64 {
 public:
  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform draw on the open interval (0,1) with 53-bit resolution.
  /// Never returns 0 or 1, so log() and Box-Muller are always safe.
  double next_unit() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Fair sign draw from the top bit of one engine output.
  double next_sign() {
    return ((*this)() >> 63) ? 1.0 : -1.0;
  }

 private:
  std::uint64_t state_ = 0;
};

/// One Box-Muller transform: consumes exactly two uniforms, yields two
/// independent standard normal deviates.
std::pair<double, double> standard_normal_pair(SplitMix64& rng);

/// Single standard normal; consumes a full Box-Muller call (two uniforms)
/// and discards the second deviate, keeping stream accounting simple.
double standard_normal(SplitMix64& rng);

}  // namespace bartree
