#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/radial_order.hpp"

namespace rcn {

using CrossingCount = std::int64_t;

inline std::int64_t choose2(std::int64_t k) noexcept { return k * (k - 1) / 2; }

/// C(n,4); 0 for n < 4.
std::int64_t choose4(std::int64_t n);

/// n x n table of left counts: entry (i,j) is the number of points of the
/// set strictly left of the directed line from point i to point j. The
/// diagonal is zero and entries(i,j) + entries(j,i) == n - 2 off it.
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  explicit LambdaMatrix(std::int32_t n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  std::int32_t n() const noexcept { return n_; }
  std::int32_t at(std::int32_t i, std::int32_t j) const noexcept {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::int32_t& at(std::int32_t i, std::int32_t j) noexcept {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  /// Zero diagonal, transpose sums, range bounds. Throws InternalError.
  void check_invariants() const;

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> entries_;
};

/// Signed integer weights aligned with a target sequence.
struct WeightAssignment {
  std::vector<std::int64_t> weights;
};

/// For every target q, the sum of w(r) over targets r strictly left of the
/// directed line anchor -> q. Runs in O(|targets|) given the ccw order: one
/// rotating window over the doubled cyclic order, entering and leaving each
/// target at most twice. `order` must come from radial_order_around over the
/// same anchor and targets (size/permutation mismatches throw
/// OrderMismatchError). Result is indexed like `targets`.
std::vector<std::int64_t> left_weight_sums(const Point& anchor,
                                           std::span<const Point> targets,
                                           const WeightAssignment& w,
                                           const RadialOrder& order);

/// Left-count matrix built from per-anchor unit-weight sweeps, O(n^2) given
/// the orders. `orders` must be all_radial_orders(s).
LambdaMatrix lambda_matrix(const PointSet& s, const std::vector<RadialOrder>& orders);
LambdaMatrix lambda_matrix(const PointSet& s, int threads = 1);

/// Sum of C(entry, 2) over the index rectangle rows x cols.
std::int64_t left_pair_sum(const LambdaMatrix& m, std::span<const std::int32_t> rows,
                           std::span<const std::int32_t> cols);
std::int64_t left_pair_sum_all(const LambdaMatrix& m);
std::int64_t left_pair_sum_row(const LambdaMatrix& m, std::int32_t row);
std::int64_t left_pair_sum_col(const LambdaMatrix& m, std::int32_t col);

/// Exact crossing count from a left-count matrix:
///   sum of C(entry,2) minus n(n-1)(n-2)(n-3)/8.
/// The subtraction must cancel to a non-negative integer at most C(n,4);
/// anything else indicates a corrupted matrix and throws InternalError.
CrossingCount crossing_number_from_lambda(const LambdaMatrix& m);

/// Same value computed anchor-by-anchor without materializing the matrix;
/// O(n) memory, O(n^2 log n) time.
CrossingCount crossing_number_of(const PointSet& s, int threads = 1);

/// Brute-force count of 4-subsets in convex position (each contributes one
/// segment crossing). O(n^4) orientation tests, fully independent of the
/// left-count machinery.
CrossingCount crossing_number_oracle(const PointSet& s, int threads = 1);

/// Counts of ordered-pair/unordered-pair incidence patterns. For a directed
/// pair (p,q) and a point pair {r,s}: type A when r and s both lie left of
/// p -> q, type B otherwise. Convex/concave quadruple counts solve the
/// resulting 2x2 system.
struct PatternCounts {
  std::int64_t type_a = 0;
  std::int64_t type_b = 0;
  std::int64_t convex_quads = 0;
  std::int64_t concave_quads = 0;
};

/// Throws InternalError when the solved quadruple counts are negative or
/// inconsistent with the pattern totals.
PatternCounts pattern_counts(const PointSet& s, const LambdaMatrix& m);

/// Diagnostic dump: n rows of n comma-separated integers.
void write_lambda_csv(std::ostream& out, const LambdaMatrix& m);

namespace detail {

/// n(n-1)(n-2)(n-3)/8 evaluated in 128-bit; the division is always exact.
std::int64_t quadruple_product_over_8(std::int64_t n);

/// Rotating-window core shared by the matrix builder and the batch
/// evaluators. `order` lists participating slots of `pts` in ccw order
/// around the anchor; `weights` and `out_sums` are slot-indexed.
///
/// Targets collinear with the anchor and a sweep pivot are tolerated only
/// when they carry zero weight (they cannot change any sum); a nonzero
/// weight on such a target makes the window boundary ambiguous and throws
/// GeneralPositionError with the witnessing triple.
void left_sums_inplace(const Point& anchor, std::span<const Point> pts,
                       std::span<const std::int32_t> order,
                       std::span<const std::int64_t> weights,
                       std::span<std::int64_t> out_sums);

}  // namespace detail

}  // namespace rcn
