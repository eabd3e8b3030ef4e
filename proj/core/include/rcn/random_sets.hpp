#pragma once

#include <cstdint>

#include "rcn/geometry.hpp"

namespace rcn {

/// n distinct points sampled uniformly from [-half_range, half_range]^2,
/// repaired until no three are collinear. Deterministic for a fixed seed.
PointSet generate_random_point_set(std::int32_t n, std::uint64_t seed,
                                   Coord half_range = Coord{1} << 20);

/// k candidate points disjoint from s, such that s and the candidates are
/// jointly in general position. Deterministic for a fixed seed.
PointSet generate_random_candidates(const PointSet& s, std::int32_t k, std::uint64_t seed,
                                    Coord half_range = Coord{1} << 20);

}  // namespace rcn
