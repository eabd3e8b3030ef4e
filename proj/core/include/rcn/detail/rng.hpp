#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace rcn::detail {

/// Uniform draw from [0, bound) using raw mt19937_64 output with rejection.
/// Unlike std::uniform_int_distribution this is bit-stable across standard
/// library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

/// Uniform coordinate in [-half_range, half_range].
inline std::int64_t uniform_coord(std::mt19937_64& rng, std::int64_t half_range) {
  return static_cast<std::int64_t>(
             uniform_below(rng, static_cast<std::uint64_t>(2 * half_range + 1))) -
         half_range;
}

}  // namespace rcn::detail
