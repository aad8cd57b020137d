// Deterministic 64-bit generator used for every randomized step, so any
// verification record replays bit-exactly from its seed.
//
// Algorithm: splitmix64 (Steele, Lea, Flood 2014). State advances by the
// golden-gamma constant; output is the mixed state. Do not change: saved
// certificates depend on the exact stream.
#pragma once

#include <cstdint>

namespace linkobs {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased value in [0, bound) via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform integer in [-bound, bound].
  long long next_symmetric(long long bound) {
    return static_cast<long long>(next_below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }
};

}  // namespace linkobs
