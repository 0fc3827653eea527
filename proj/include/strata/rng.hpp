#pragma once

#include <cstdint>

namespace strata {

// Deterministic, platform-independent PRNG for seeded test data and
// tie-breaking searches. (std:: distributions are not reproducible across
// standard libraries, so raw outputs are reduced by hand.)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // small signed integer in [-span, span]
  long small_int(long span) {
    return long(below(std::uint64_t(2 * span + 1))) - span;
  }

 private:
  std::uint64_t state_;
};

}  // namespace strata
