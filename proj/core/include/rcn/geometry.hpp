#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcn/errors.hpp"

namespace rcn {

using Coord = std::int64_t;

/// Planar point with exact integer coordinates.
struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// "(x,y)" with plain decimal coordinates.
std::string to_string(const Point& p);

/// Sign of the cross product (q - p) x (r - p), evaluated exactly in 128-bit
/// integers: +1 iff r is strictly left of the directed line p -> q, -1 iff
/// strictly right, 0 iff the three points are collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) noexcept {
  const __int128 det =
      static_cast<__int128>(q.x - p.x) * static_cast<__int128>(r.y - p.y) -
      static_cast<__int128>(q.y - p.y) * static_cast<__int128>(r.x - p.x);
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

/// Witness of a failed distinctness / general-position check.
struct Violation {
  enum class Kind { kDuplicate, kCollinear };

  Kind kind = Kind::kDuplicate;
  Point a, b, c;  // kDuplicate: a == b; kCollinear: the witnessing triple
  std::int64_t ia = -1, ib = -1, ic = -1;  // indices where known, else -1

  std::string describe() const;
};

struct GeneralPositionError : Error {
  explicit GeneralPositionError(Violation v);
  Violation violation;
};

/// Ordered sequence of points. The constructor enforces the coordinate
/// capacity bound; distinctness and general position are checked by the
/// validation routines below, not on construction.
class PointSet {
 public:
  /// Max |x|, |y|. Orientation determinants stay within 8 * bound^2 and the
  /// 128-bit predicate evaluates them exactly.
  static constexpr Coord kCoordBound = Coord{1} << 30;

  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }
  const Point& operator[](std::size_t i) const noexcept { return pts_[i]; }
  std::span<const Point> points() const noexcept { return pts_; }
  auto begin() const noexcept { return pts_.begin(); }
  auto end() const noexcept { return pts_.end(); }

  void push_back(const Point& p);
  void replace(std::size_t i, const Point& p);

  /// Copy with the i-th point removed.
  PointSet without(std::size_t i) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

/// Checks pairwise distinctness and that no three points are collinear.
/// Returns the first witnessing duplicate pair or collinear triple found,
/// or nullopt when the set is in general position. Uses per-anchor radial
/// sorts for n >= 16 and the naive triple scan below that.
std::optional<Violation> find_general_position_violation(const PointSet& s);

/// Throws GeneralPositionError carrying the witness.
void require_general_position(const PointSet& s);

}  // namespace rcn
