#pragma once

#include <cstdint>

namespace solcheck {

// xorshift64* generator (shifts 12/25/27, multiplier 2685821657736338717).
// Deterministic across platforms; every randomized search records its seed.
struct XorShift64 {
  std::uint64_t state;

  explicit XorShift64(std::uint64_t seed)
      : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state = x;
    return x * 2685821657736338717ull;
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace solcheck
