#pragma once

#include <cstdint>

namespace parasphere::rng {

// splitmix64 finalizer; full-period bijection on 64-bit words.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based per-trial word: independent of draw order and worker count.
// `stream` separates multiple draws within the same trial.
constexpr std::uint64_t trial_word(std::uint64_t seed, std::uint64_t trial,
                                   std::uint64_t stream = 0) {
  return mix(seed ^ mix(trial + 0x632be59bd9b4e019ULL * (stream + 1)));
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace parasphere::rng
