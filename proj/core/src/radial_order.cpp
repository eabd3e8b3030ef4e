#include "rcn/radial_order.hpp"

#include <algorithm>
#include <limits>

#include "parallel.hpp"

namespace rcn {

namespace detail {

void sort_ccw(const Point& anchor, std::span<const Point> pts, std::size_t skip,
              std::vector<RayDir>& dirs, std::vector<std::int32_t>& order) {
  const std::size_t n = pts.size();
  dirs.clear();
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    RayDir d;
    d.dx = pts[i].x - anchor.x;
    d.dy = pts[i].y - anchor.y;
    if (d.dx == 0 && d.dy == 0) {
      Violation v;
      v.kind = Violation::Kind::kDuplicate;
      v.a = v.b = anchor;
      v.ib = static_cast<std::int64_t>(i);
      throw GeneralPositionError(std::move(v));
    }
    d.idx = static_cast<std::int32_t>(i);
    d.half = half_of(d.dx, d.dy);
    dirs.push_back(d);
  }
  std::sort(dirs.begin(), dirs.end(), ccw_before);
  order.resize(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) order[k] = dirs[k].idx;
}

std::optional<std::pair<std::int32_t, std::int32_t>> find_anchor_collinearity(
    std::span<const RayDir> dirs) {
  // Same ray: adjacent tie inside one half-plane block.
  for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
    if (dirs[k].half == dirs[k + 1].half && cross_sign(dirs[k], dirs[k + 1]) == 0) {
      return std::make_pair(dirs[k].idx, dirs[k + 1].idx);
    }
  }
  // Opposite rays: merge the two blocks after mapping the second one back by
  // half a turn. Both blocks are strictly increasing in angle, so a shared
  // axial direction shows up as a zero cross product during the merge.
  std::size_t split = 0;
  while (split < dirs.size() && dirs[split].half == 0) ++split;
  std::size_t i = 0, j = split;
  while (i < split && j < dirs.size()) {
    RayDir flipped;
    flipped.dx = -dirs[j].dx;
    flipped.dy = -dirs[j].dy;
    const int c = cross_sign(dirs[i], flipped);
    if (c == 0) return std::make_pair(dirs[i].idx, dirs[j].idx);
    if (c > 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::nullopt;
}

bool anchor_in_general_position(const Point& anchor, std::span<const Point> targets) {
  thread_local std::vector<RayDir> dirs;
  thread_local std::vector<std::int32_t> order;
  try {
    sort_ccw(anchor, targets, std::numeric_limits<std::size_t>::max(), dirs, order);
  } catch (const GeneralPositionError&) {
    return false;  // a target coincides with the anchor
  }
  return !find_anchor_collinearity(dirs).has_value();
}

}  // namespace detail

RadialOrder radial_order_around(const Point& anchor, std::span<const Point> targets) {
  std::vector<detail::RayDir> dirs;
  RadialOrder result;
  result.anchor = anchor;
  detail::sort_ccw(anchor, targets, std::numeric_limits<std::size_t>::max(), dirs, result.order);
  if (auto pair = detail::find_anchor_collinearity(dirs)) {
    Violation v;
    v.kind = Violation::Kind::kCollinear;
    v.a = anchor;
    v.b = targets[pair->first];
    v.c = targets[pair->second];
    v.ib = pair->first;
    v.ic = pair->second;
    throw GeneralPositionError(std::move(v));
  }
  return result;
}

std::vector<RadialOrder> all_radial_orders(const PointSet& s, int threads) {
  const std::size_t n = s.size();
  const auto pts = s.points();
  std::vector<RadialOrder> result(n);
  detail::parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<detail::RayDir> dirs;
    std::vector<std::int32_t> order;
    for (std::size_t i = begin; i < end; ++i) {
      detail::sort_ccw(pts[i], pts, i, dirs, order);
      // Adjacent same-ray ties around any endpoint anchor expose every
      // collinear triple of the set; the full antipodal scan is not needed
      // when all points take a turn as the anchor.
      for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
        if (dirs[k].half == dirs[k + 1].half &&
            detail::cross_sign(dirs[k], dirs[k + 1]) == 0) {
          Violation v;
          v.kind = Violation::Kind::kCollinear;
          v.a = pts[i];
          v.b = pts[dirs[k].idx];
          v.c = pts[dirs[k + 1].idx];
          v.ia = static_cast<std::int64_t>(i);
          v.ib = dirs[k].idx;
          v.ic = dirs[k + 1].idx;
          throw GeneralPositionError(std::move(v));
        }
      }
      result[i].anchor = pts[i];
      result[i].order = std::move(order);
      order.clear();
    }
  });
  return result;
}

}  // namespace rcn
