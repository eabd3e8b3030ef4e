#include "rcn/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rcn/radial_order.hpp"

namespace rcn {

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string Violation::describe() const {
  if (kind == Kind::kDuplicate) {
    return "duplicate point " + to_string(a);
  }
  return "collinear triple " + to_string(a) + " " + to_string(b) + " " + to_string(c);
}

GeneralPositionError::GeneralPositionError(Violation v)
    : Error(v.describe()), violation(std::move(v)) {}

namespace {

void check_capacity(const Point& p) {
  if (p.x > PointSet::kCoordBound || p.x < -PointSet::kCoordBound ||
      p.y > PointSet::kCoordBound || p.y < -PointSet::kCoordBound) {
    throw CapacityError("coordinate of " + to_string(p) + " exceeds the capacity bound 2^30");
  }
}

}  // namespace

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  for (const Point& p : pts_) check_capacity(p);
}

void PointSet::push_back(const Point& p) {
  check_capacity(p);
  pts_.push_back(p);
}

void PointSet::replace(std::size_t i, const Point& p) {
  check_capacity(p);
  pts_[i] = p;
}

PointSet PointSet::without(std::size_t i) const {
  std::vector<Point> rest;
  rest.reserve(pts_.size() > 0 ? pts_.size() - 1 : 0);
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    if (j != i) rest.push_back(pts_[j]);
  }
  return PointSet(std::move(rest));
}

namespace {

std::optional<Violation> find_duplicate(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  std::vector<std::int32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
    return a < b;
  });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (pts[idx[k]] == pts[idx[k + 1]]) {
      Violation v;
      v.kind = Violation::Kind::kDuplicate;
      v.a = v.b = pts[idx[k]];
      v.ia = idx[k];
      v.ib = idx[k + 1];
      return v;
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_collinear_naive(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == 0) {
          Violation v;
          v.kind = Violation::Kind::kCollinear;
          v.a = pts[i];
          v.b = pts[j];
          v.c = pts[k];
          v.ia = static_cast<std::int64_t>(i);
          v.ib = static_cast<std::int64_t>(j);
          v.ic = static_cast<std::int64_t>(k);
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

// Every collinear triple a-b-c (b between a and c) puts two same-ray targets
// around each endpoint anchor, where they sort adjacently. Scanning adjacent
// pairs of every anchor's sorted directions therefore finds all triples.
std::optional<Violation> find_collinear_sorted(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  std::vector<detail::RayDir> dirs;
  std::vector<std::int32_t> order;
  for (std::size_t anchor = 0; anchor < n; ++anchor) {
    detail::sort_ccw(pts[anchor], pts, anchor, dirs, order);
    for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
      if (dirs[k].half == dirs[k + 1].half && detail::cross_sign(dirs[k], dirs[k + 1]) == 0) {
        Violation v;
        v.kind = Violation::Kind::kCollinear;
        v.a = pts[anchor];
        v.b = pts[dirs[k].idx];
        v.c = pts[dirs[k + 1].idx];
        v.ia = static_cast<std::int64_t>(anchor);
        v.ib = dirs[k].idx;
        v.ic = dirs[k + 1].idx;
        return v;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> find_general_position_violation(const PointSet& s) {
  const auto pts = s.points();
  if (auto dup = find_duplicate(pts)) return dup;
  if (pts.size() < 3) return std::nullopt;
  if (pts.size() < 16) return find_collinear_naive(pts);
  return find_collinear_sorted(pts);
}

void require_general_position(const PointSet& s) {
  if (auto v = find_general_position_violation(s)) {
    throw GeneralPositionError(std::move(*v));
  }
}

}  // namespace rcn
