#pragma once

#include <cstdint>
#include <random>

namespace setchrome {

// Every random draw in the library comes from std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Distributions from <random> are not
// portable between standard libraries, so the conversions below are spelled
// out instead.
using Rng = std::mt19937_64;

struct Seed {
  std::uint64_t value = 0;
};

inline Rng make_rng(Seed seed) { return Rng(seed.value); }

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of trial `trial` in sweep cell `cell`:
//   mix64(base ^ mix64((cell << 32) ^ trial))
// Cells and trials can be re-run in isolation from (base, cell, trial) alone.
constexpr Seed derive_seed(Seed base, std::uint64_t cell, std::uint64_t trial) {
  return Seed{mix64(base.value ^ mix64((cell << 32) ^ trial))};
}

}  // namespace setchrome
