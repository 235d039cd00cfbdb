#pragma once

#include <cstdint>

namespace sarcgen {

// SplitMix64 (Vigna's reference constants). Deterministic across platforms;
// the shipped test vectors in data/splitmix64_vectors.txt pin the sequence.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough index in [0, n); n must be positive.
  constexpr std::uint64_t pick(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace sarcgen
