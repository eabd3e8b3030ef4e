#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rcn/geometry.hpp"

namespace rcn {

/// Counterclockwise angular order of a target sequence around an anchor.
/// Angles start at direction (1,0) and sweep through (0,1), (-1,0), (0,-1);
/// `order` holds indices into the target sequence the order was built from.
struct RadialOrder {
  Point anchor;
  std::vector<std::int32_t> order;
};

/// Sorts `targets` counterclockwise around `anchor`. The anchor must not
/// coincide with a target and no two targets may be collinear with it (same
/// ray or opposite rays); violations throw GeneralPositionError with the
/// witnessing pair. Deterministic for a fixed input order.
RadialOrder radial_order_around(const Point& anchor, std::span<const Point> targets);

/// One order per point p of `s` over s minus p, with indices into `s`
/// (the anchor index is skipped). Any collinear triple inside `s` surfaces
/// as a comparator tie at one of its endpoint anchors and throws.
std::vector<RadialOrder> all_radial_orders(const PointSet& s, int threads = 1);

namespace detail {

/// Direction from an anchor to one target, plus the target's slot.
struct RayDir {
  Coord dx = 0, dy = 0;
  std::int32_t idx = 0;
  std::int8_t half = 0;  // 0: angle in [0,pi), 1: angle in [pi,2pi)
};

inline std::int8_t half_of(Coord dx, Coord dy) noexcept {
  return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

inline int cross_sign(const RayDir& a, const RayDir& b) noexcept {
  const __int128 det = static_cast<__int128>(a.dx) * b.dy - static_cast<__int128>(a.dy) * b.dx;
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

inline bool ccw_before(const RayDir& a, const RayDir& b) noexcept {
  if (a.half != b.half) return a.half < b.half;
  return cross_sign(a, b) > 0;
}

/// Builds the sorted direction array and slot order for all points of `pts`
/// except `skip` (pass npos to keep all). Same-ray ties sort adjacently and
/// are NOT rejected here. Throws if a kept point equals the anchor.
void sort_ccw(const Point& anchor, std::span<const Point> pts, std::size_t skip,
              std::vector<RayDir>& dirs, std::vector<std::int32_t>& order);

/// Scans a ccw-sorted direction array for a pair collinear with the anchor:
/// same-ray pairs are adjacent ties, opposite-ray pairs are found by an
/// antipodal merge of the two half-plane blocks. Returns the slot pair.
std::optional<std::pair<std::int32_t, std::int32_t>> find_anchor_collinearity(
    std::span<const RayDir> dirs);

/// True when anchor + targets are free of anchor-collinear pairs (and the
/// anchor hits no target). Used for candidate filtering.
bool anchor_in_general_position(const Point& anchor, std::span<const Point> targets);

}  // namespace detail

}  // namespace rcn
