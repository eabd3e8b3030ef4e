#pragma once

#include <cstdint>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/lambda.hpp"

namespace rcn {

/// One evaluated variant: the point that was removed / added / substituted
/// and the exact crossing count of the resulting set.
struct DeltaEntry {
  std::int32_t index = 0;  // position in the source set (remove) or candidate list (add/move)
  Point point;
  CrossingCount crossings = 0;
};

/// Entries appear in the caller's order, one per requested variant.
struct DeltaResult {
  std::vector<DeltaEntry> entries;
};

/// Exact crossing count of s minus p, for every p, in one O(n^2) pass
/// (plus the O(n^2 log n) per-anchor sorts).
///
/// Per anchor q the unit-weight sweep yields the left-count row at q; a
/// second sweep with weights 1 - leftcount(q, r) accumulates, for every
/// other point p, the correction that removing p applies to the pair sums
/// of the surviving rows. The final count for each p assembles the full
/// pair sum minus p's row and column plus its correction.
DeltaResult batch_remove(const PointSet& s, int threads = 1);

/// Exact crossing count of s plus q, for every candidate q of c, in one
/// O((n+k)^2) pass. Candidates must be distinct from each other and from s
/// (OverlapError / GeneralPositionError otherwise).
///
/// Base-set left counts against every point of s u c come from 0/1-weight
/// sweeps (weight 1 on base points, 0 on candidates); candidate anchors
/// sweep the base set alone for their own rows. A second sweep per base
/// anchor with the left-count row as weights accumulates each candidate's
/// pair-sum correction. Candidates collinear with each other around an
/// anchor are harmless (zero weight); a candidate collinear with two base
/// points corrupts that row and throws.
DeltaResult batch_add(const PointSet& s, const PointSet& c, int threads = 1);

/// Exact crossing count of s with point p_index replaced by q, for every
/// candidate q of c: batch_add over s minus that point. The candidate list
/// may contain the original position (identity move). Throws NotAMemberError
/// when p_index is out of range.
DeltaResult batch_move(const PointSet& s, std::size_t p_index, const PointSet& c,
                       int threads = 1);

}  // namespace rcn
