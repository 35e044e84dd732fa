#pragma once

#include <cstdint>

namespace tourn {

struct Seed {
  std::uint64_t value = 0;
};

/// Output number `index` of a SplitMix64 stream started at `seed`.
///
/// The state after k steps is seed + k * golden-gamma, so any draw can be
/// computed directly. Generators use index i*n + j for the pair (i, j),
/// which keeps output independent of iteration order.
constexpr std::uint64_t splitmix64_at(Seed seed, std::uint64_t index) {
  std::uint64_t z = seed.value + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double uniform_at(Seed seed, std::uint64_t index) {
  return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace tourn
