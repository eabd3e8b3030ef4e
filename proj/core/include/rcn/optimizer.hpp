#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rcn/delta.hpp"
#include "rcn/geometry.hpp"
#include "rcn/lambda.hpp"

namespace rcn {

/// Knobs of the move-based local search. Defaults keep moves local (radius 8)
/// and accept plateau moves, which lets the search traverse equal-cost
/// regions instead of stalling.
struct OptimizerConfig {
  std::uint64_t seed = 1;
  std::int64_t rounds = 1000;
  std::int32_t radius = 8;               // L-inf half-width of the candidate ball
  std::int32_t candidates_per_round = 16;
  Coord coordinate_bound = PointSet::kCoordBound;
  bool accept_equal = true;
  enum class PickRule { kRandom, kRoundRobin };
  PickRule pick = PickRule::kRandom;
  int threads = 1;
};

struct RoundRecord {
  std::int64_t round = 0;
  std::int32_t p_index = 0;
  Point p;
  std::int32_t n_candidates = 0;
  std::optional<Point> best;  // empty when the round was skipped
  CrossingCount cr_before = 0;
  CrossingCount cr_after = 0;  // state after the round (== cr_before if not accepted)
  bool accepted = false;
  std::string skip_reason;  // empty unless the round was skipped
};

struct OptimizerTrace {
  std::vector<RoundRecord> rounds;
  PointSet best_set;
  CrossingCount best_cr = 0;
};

/// Up to cfg.candidates_per_round distinct integer points from the L-inf
/// ball of cfg.radius around s[p_index] (the center cell excluded), each
/// within the coordinate bound, distinct from the rest of the set, and not
/// collinear with any pair of it. Sampling order is a seeded shuffle of the
/// ball, so results are deterministic. Throws ExhaustedError when the ball
/// holds no valid candidate at all.
PointSet candidate_gen(const PointSet& s, std::size_t p_index, const OptimizerConfig& cfg,
                       std::mt19937_64& rng);

/// Hill climb at fixed n: each round picks a point, evaluates a candidate
/// batch via batch_move, and accepts the best candidate when its crossing
/// count improves on the current one (or equals it, with accept_equal).
/// Ties break toward the lowest candidate index. Rounds whose candidate ball
/// is exhausted are recorded as skipped and the search continues.
OptimizerTrace optimize_move(const PointSet& s0, const OptimizerConfig& cfg);

struct SizeChangeEntry {
  std::int32_t index = 0;
  Point point;
  CrossingCount crossings = 0;
  /// Exact comparison 10^6 * crossings < 379972 * C(m,4) for the variant
  /// size m. The threshold tracks the best known asymptotic lower bound on
  /// the minimum crossing count, so a count below it signals an internal
  /// error at large n. Small optimal sets sit below the threshold
  /// legitimately; treat the flag as a large-n diagnostic.
  bool below_min_bound = false;
};

struct SizeChangeReport {
  std::vector<SizeChangeEntry> removals;
  std::vector<SizeChangeEntry> additions;
};

/// Every single-point removal of s and every single-point addition from c,
/// annotated with the lower-bound flag above. c may be empty.
SizeChangeReport explore_size_change(const PointSet& s, const PointSet& c, int threads = 1);

/// True iff `crossings` lies strictly below the minimum-crossing lower bound
/// for sets of `m` points (exact integer comparison).
bool below_min_crossing_bound(CrossingCount crossings, std::int64_t m);

/// One line per round:
///   round=R p=(x,y) ncand=K best=(x,y) cr_before=A cr_after=B accepted=0|1
/// with "best=-" and a trailing " skipped=<reason>" on skipped rounds.
void write_trace(std::ostream& out, const OptimizerTrace& trace);

}  // namespace rcn
