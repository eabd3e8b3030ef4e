#include "rcn/lambda.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "parallel.hpp"

namespace rcn {

std::int64_t choose4(std::int64_t n) {
  if (n < 4) return 0;
  const __int128 p = static_cast<__int128>(n) * (n - 1) * (n - 2) * (n - 3);
  return static_cast<std::int64_t>(p / 24);
}

namespace detail {

std::int64_t quadruple_product_over_8(std::int64_t n) {
  const __int128 p = static_cast<__int128>(n) * (n - 1) * (n - 2) * (n - 3);
  // Product of four consecutive integers, always divisible by 8.
  return static_cast<std::int64_t>(p / 8);
}

void left_sums_inplace(const Point& anchor, std::span<const Point> pts,
                       std::span<const std::int32_t> order,
                       std::span<const std::int64_t> weights,
                       std::span<std::int64_t> out_sums) {
  const std::size_t m = order.size();
  if (m == 0) return;

  // Window invariant: for pivot position i the points strictly left of the
  // line anchor -> pivot occupy a contiguous run of positions (i, e) in the
  // doubled cyclic order, because "strictly left" is an open half-turn of
  // angles starting just past the pivot. Both endpoints of the run only move
  // forward as the pivot advances, so each position enters and leaves the
  // window a bounded number of times.
  std::int64_t sum = 0;
  std::size_t lo = 1;  // inclusive window start; equals i + 1 for pivot i
  std::size_t hi = 1;  // exclusive window end
  for (std::size_t i = 0; i < m; ++i) {
    if (lo < i + 1) {
      if (lo < hi) sum -= weights[order[lo % m]];
      ++lo;
      if (hi < lo) hi = lo;
    }
    const Point& pivot = pts[order[i]];
    while (hi < i + m) {
      const std::int32_t slot = order[hi % m];
      const int o = orientation(anchor, pivot, pts[slot]);
      if (o < 0) break;
      if (o > 0) {
        sum += weights[slot];
      } else if (weights[slot] != 0) {
        // A weighted target collinear with the pivot makes the window
        // boundary ambiguous; zero-weight targets cannot change any sum and
        // pass through.
        Violation v;
        v.kind = Violation::Kind::kCollinear;
        v.a = anchor;
        v.b = pivot;
        v.c = pts[slot];
        throw GeneralPositionError(std::move(v));
      }
      ++hi;
    }
    out_sums[order[i]] = sum;
  }
}

}  // namespace detail

void LambdaMatrix::check_invariants() const {
  const std::int32_t n = n_;
  for (std::int32_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) {
      throw InternalError("left-count matrix: nonzero diagonal at " + std::to_string(i));
    }
    for (std::int32_t j = i + 1; j < n; ++j) {
      const std::int32_t a = at(i, j), b = at(j, i);
      if (a < 0 || a > n - 2 || b < 0 || b > n - 2 || a + b != n - 2) {
        throw InternalError("left-count matrix: entries (" + std::to_string(i) + "," +
                            std::to_string(j) + ") = " + std::to_string(a) + "/" +
                            std::to_string(b) + " break the transpose identity");
      }
    }
  }
}

std::vector<std::int64_t> left_weight_sums(const Point& anchor,
                                           std::span<const Point> targets,
                                           const WeightAssignment& w,
                                           const RadialOrder& order) {
  const std::size_t m = targets.size();
  if (!(order.anchor == anchor)) {
    throw OrderMismatchError("radial order was built around " + to_string(order.anchor) +
                             ", not " + to_string(anchor));
  }
  if (order.order.size() != m || w.weights.size() != m) {
    throw OrderMismatchError("radial order / weights do not cover the target set");
  }
  std::vector<char> seen(m, 0);
  for (const std::int32_t slot : order.order) {
    if (slot < 0 || static_cast<std::size_t>(slot) >= m || seen[slot]) {
      throw OrderMismatchError("radial order is not a permutation of the target indices");
    }
    seen[slot] = 1;
  }
  std::vector<std::int64_t> sums(m, 0);
  detail::left_sums_inplace(anchor, targets, order.order, w.weights, sums);
  return sums;
}

LambdaMatrix lambda_matrix(const PointSet& s, const std::vector<RadialOrder>& orders) {
  const std::size_t n = s.size();
  if (orders.size() != n) {
    throw OrderMismatchError("expected one radial order per point");
  }
  const auto pts = s.points();
  LambdaMatrix m(static_cast<std::int32_t>(n));
  const std::vector<std::int64_t> unit(n, 1);
  std::vector<std::int64_t> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(orders[i].anchor == pts[i]) || orders[i].order.size() != n - 1) {
      throw OrderMismatchError("radial order " + std::to_string(i) +
                               " does not cover the set minus its anchor");
    }
    detail::left_sums_inplace(pts[i], pts, orders[i].order, unit, sums);
    for (const std::int32_t j : orders[i].order) {
      m.at(static_cast<std::int32_t>(i), j) = static_cast<std::int32_t>(sums[j]);
    }
  }
  return m;
}

LambdaMatrix lambda_matrix(const PointSet& s, int threads) {
  const std::size_t n = s.size();
  const auto pts = s.points();
  LambdaMatrix m(static_cast<std::int32_t>(n));
  detail::parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<detail::RayDir> dirs;
    std::vector<std::int32_t> order;
    std::vector<std::int64_t> unit(n, 1);
    std::vector<std::int64_t> sums(n, 0);
    for (std::size_t i = begin; i < end; ++i) {
      detail::sort_ccw(pts[i], pts, i, dirs, order);
      detail::left_sums_inplace(pts[i], pts, order, unit, sums);
      for (const std::int32_t j : order) {
        m.at(static_cast<std::int32_t>(i), j) = static_cast<std::int32_t>(sums[j]);
      }
    }
  });
  return m;
}

std::int64_t left_pair_sum(const LambdaMatrix& m, std::span<const std::int32_t> rows,
                           std::span<const std::int32_t> cols) {
  std::int64_t total = 0;
  for (const std::int32_t r : rows) {
    for (const std::int32_t c : cols) {
      total += choose2(m.at(r, c));
    }
  }
  return total;
}

std::int64_t left_pair_sum_all(const LambdaMatrix& m) {
  const std::int32_t n = m.n();
  std::int64_t total = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    for (std::int32_t j = 0; j < n; ++j) {
      total += choose2(m.at(i, j));
    }
  }
  return total;
}

std::int64_t left_pair_sum_row(const LambdaMatrix& m, std::int32_t row) {
  std::int64_t total = 0;
  for (std::int32_t j = 0; j < m.n(); ++j) total += choose2(m.at(row, j));
  return total;
}

std::int64_t left_pair_sum_col(const LambdaMatrix& m, std::int32_t col) {
  std::int64_t total = 0;
  for (std::int32_t i = 0; i < m.n(); ++i) total += choose2(m.at(i, col));
  return total;
}

namespace {

CrossingCount finish_crossing_count(std::int64_t pair_sum, std::int64_t n) {
  const std::int64_t cr = pair_sum - detail::quadruple_product_over_8(n);
  if (cr < 0) {
    throw InternalError("crossing count came out negative (" + std::to_string(cr) +
                        "); left-count data is corrupted");
  }
  if (cr > choose4(n)) {
    throw InternalError("crossing count " + std::to_string(cr) + " exceeds C(n,4)");
  }
  return cr;
}

}  // namespace

CrossingCount crossing_number_from_lambda(const LambdaMatrix& m) {
  return finish_crossing_count(left_pair_sum_all(m), m.n());
}

CrossingCount crossing_number_of(const PointSet& s, int threads) {
  const std::size_t n = s.size();
  const auto pts = s.points();
  const int t = detail::clamp_threads(threads, n);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(t), 0);
  detail::parallel_chunks(n, t, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<detail::RayDir> dirs;
    std::vector<std::int32_t> order;
    std::vector<std::int64_t> unit(n, 1);
    std::vector<std::int64_t> sums(n, 0);
    std::int64_t acc = 0;
    for (std::size_t i = begin; i < end; ++i) {
      detail::sort_ccw(pts[i], pts, i, dirs, order);
      detail::left_sums_inplace(pts[i], pts, order, unit, sums);
      for (const std::int32_t j : order) acc += choose2(sums[j]);
    }
    partial[chunk] = acc;
  });
  std::int64_t pair_sum = 0;
  for (const std::int64_t p : partial) pair_sum += p;
  return finish_crossing_count(pair_sum, static_cast<std::int64_t>(n));
}

namespace {

inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orientation(a, b, c) != orientation(a, b, d) &&
         orientation(c, d, a) != orientation(c, d, b);
}

inline bool convex_quadruple(const Point& a, const Point& b, const Point& c, const Point& d) {
  // In convex position exactly one of the three pairings crosses; in concave
  // position none does.
  return segments_cross(a, b, c, d) || segments_cross(a, c, b, d) || segments_cross(a, d, b, c);
}

}  // namespace

CrossingCount crossing_number_oracle(const PointSet& s, int threads) {
  const std::size_t n = s.size();
  if (n < 4) return 0;
  const auto pts = s.points();
  const int t = detail::clamp_threads(threads, n);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(t), 0);
  detail::parallel_chunks(n, t, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::int64_t acc = 0;
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t d = c + 1; d < n; ++d) {
            if (convex_quadruple(pts[a], pts[b], pts[c], pts[d])) ++acc;
          }
        }
      }
    }
    partial[chunk] = acc;
  });
  std::int64_t total = 0;
  for (const std::int64_t p : partial) total += p;
  return total;
}

PatternCounts pattern_counts(const PointSet& s, const LambdaMatrix& m) {
  if (static_cast<std::size_t>(m.n()) != s.size()) {
    throw OrderMismatchError("left-count matrix size does not match the point set");
  }
  const std::int64_t n = m.n();
  PatternCounts pc;
  pc.type_a = left_pair_sum_all(m);
  const __int128 total128 = static_cast<__int128>(n) * (n - 1) * (n - 2) * (n - 3) / 2;
  const std::int64_t total = static_cast<std::int64_t>(total128);
  pc.type_b = total - pc.type_a;
  const std::int64_t quads = choose4(n);
  // type_a = 4*convex + 3*concave and convex + concave = C(n,4).
  pc.convex_quads = pc.type_a - 3 * quads;
  pc.concave_quads = 4 * quads - pc.type_a;
  if (pc.convex_quads < 0 || pc.concave_quads < 0 ||
      pc.convex_quads + pc.concave_quads != quads ||
      4 * pc.convex_quads + 3 * pc.concave_quads != pc.type_a ||
      8 * pc.convex_quads + 9 * pc.concave_quads != pc.type_b) {
    throw InternalError("pattern counts are inconsistent; left-count data is corrupted");
  }
  return pc;
}

void write_lambda_csv(std::ostream& out, const LambdaMatrix& m) {
  for (std::int32_t i = 0; i < m.n(); ++i) {
    for (std::int32_t j = 0; j < m.n(); ++j) {
      if (j > 0) out << ',';
      out << m.at(i, j);
    }
    out << '\n';
  }
}

}  // namespace rcn
