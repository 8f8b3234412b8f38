#pragma once

#include <cstdint>

namespace belyi {

/// Seedable 64-bit generator (SplitMix64, Steele/Lea/Flood).
///
/// The generator is tiny, portable, and bit-reproducible across platforms,
/// which is what the experiment harness needs. `split(stream)` derives a
/// decorrelated child generator without advancing the parent; the harness
/// uses one child per trial (and the sampler one child per purpose) so that
/// results do not depend on thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Unbiased draw from [0, bound) via rejection. bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return (next() >> 63) != 0; }

  /// Derived stream; distinct `stream` values give decorrelated children.
  SplitMix64 split(std::uint64_t stream) const {
    return SplitMix64(mix(state_ + 0xD1B54A32D192ED03ULL * (stream + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace belyi
