#pragma once

#include <cstdint>

namespace sq {

// SplitMix64 used as a counter-based generator: sample i of stream `seed`
// is mix(seed + (i+1)*gamma). Evaluation order does not matter, so chunked
// or parallel consumers reproduce the sequential stream exactly.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix64(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace sq
