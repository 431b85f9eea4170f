// Deterministic random number generation.
//
// Reproducibility is part of the library contract: the same seed must yield
// byte-identical solver output on every platform.  std::uniform_int_distribution
// is implementation-defined, so we roll our own bounded sampling on top of a
// fixed 64-bit generator (xoshiro256** seeded through splitmix64, both with
// published reference semantics).
#pragma once

#include <array>
#include <cstdint>

namespace realdet {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform draw from {0, 1, ..., bound-1} via rejection sampling (no modulo
  // bias, deterministic across platforms).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform draw from the integer range [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Independent child stream; used to give each recursion level its own
  // deterministic stream regardless of how many draws earlier levels consume.
  Rng split(std::uint64_t stream_index) {
    std::uint64_t mix = next_u64() ^ (0xa0761d6478bd642fULL * (stream_index + 1));
    return Rng(mix);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace realdet
