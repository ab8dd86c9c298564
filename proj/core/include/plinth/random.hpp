#pragma once

#include <cstdint>
#include <random>

namespace plinth {

// Every seeded search in the library draws from mt19937_64, whose output
// sequence is fixed by the C++ standard. The standard distributions are not,
// so bounded draws go through `uniform_below` instead.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 1;

// Unbiased draw from [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace plinth
