#include "rcn/delta.hpp"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rcn/radial_order.hpp"
#include "parallel.hpp"

namespace rcn {

namespace {

// Coordinates fit 32 bits under the capacity bound.
inline std::uint64_t pack(const Point& p) noexcept {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
}

struct AnchorScratch {
  std::vector<detail::RayDir> dirs;
  std::vector<std::int32_t> order;
  std::vector<std::int64_t> lam_row;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> sums;

  void resize(std::size_t total) {
    lam_row.assign(total, 0);
    weights.assign(total, 0);
    sums.assign(total, 0);
  }
};

CrossingCount assemble(std::int64_t pair_sum, std::int64_t m) {
  const std::int64_t cr = pair_sum - detail::quadruple_product_over_8(m);
  if (cr < 0 || cr > choose4(m)) {
    throw InternalError("batch evaluator produced crossing count " + std::to_string(cr) +
                        " outside [0, C(" + std::to_string(m) + ",4)]");
  }
  return cr;
}

}  // namespace

DeltaResult batch_remove(const PointSet& s, int threads) {
  const std::size_t n = s.size();
  DeltaResult result;
  result.entries.reserve(n);
  if (n == 0) return result;

  const auto pts = s.points();
  const int t = detail::clamp_threads(threads, n);

  std::vector<std::int64_t> row_f(n, 0);
  std::vector<std::int64_t> f_part(static_cast<std::size_t>(t), 0);
  std::vector<std::vector<std::int64_t>> col_part(static_cast<std::size_t>(t));
  std::vector<std::vector<std::int64_t>> corr_part(static_cast<std::size_t>(t));

  detail::parallel_chunks(n, t, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& col = col_part[chunk];
    auto& corr = corr_part[chunk];
    col.assign(n, 0);
    corr.assign(n, 0);
    AnchorScratch ws;
    ws.resize(n);
    for (std::size_t q = begin; q < end; ++q) {
      detail::sort_ccw(pts[q], pts, q, ws.dirs, ws.order);

      // Pass 1: unit weights give the left-count row at q.
      for (const std::int32_t slot : ws.order) ws.weights[slot] = 1;
      detail::left_sums_inplace(pts[q], pts, ws.order, ws.weights, ws.lam_row);
      std::int64_t rf = 0;
      for (const std::int32_t slot : ws.order) {
        const std::int64_t c2 = choose2(ws.lam_row[slot]);
        rf += c2;
        col[slot] += c2;
      }
      row_f[q] = rf;
      f_part[chunk] += rf;

      // Pass 2: dropping a point p decrements the left count of every pair
      // (q, r) whose left half-plane contains p, changing its pair count by
      // 1 - leftcount(q, r). Points r with p strictly left of q -> r are
      // exactly the targets strictly right of q -> p, so the complement of
      // the left sum at pivot p collects the full correction for p at once.
      std::int64_t wtot = 0;
      for (const std::int32_t slot : ws.order) {
        ws.weights[slot] = 1 - ws.lam_row[slot];
        wtot += ws.weights[slot];
      }
      detail::left_sums_inplace(pts[q], pts, ws.order, ws.weights, ws.sums);
      for (const std::int32_t slot : ws.order) {
        corr[slot] += wtot - ws.weights[slot] - ws.sums[slot];
      }
    }
  });

  std::int64_t f_all = 0;
  std::vector<std::int64_t> col_f(n, 0);
  std::vector<std::int64_t> correction(n, 0);
  for (int c = 0; c < t; ++c) {
    f_all += f_part[c];
    for (std::size_t i = 0; i < n; ++i) {
      col_f[i] += col_part[c][i];
      correction[i] += corr_part[c][i];
    }
  }

  const std::int64_t m = static_cast<std::int64_t>(n) - 1;
  for (std::size_t p = 0; p < n; ++p) {
    const std::int64_t pair_sum = f_all - row_f[p] - col_f[p] + correction[p];
    result.entries.push_back(
        {static_cast<std::int32_t>(p), pts[p], assemble(pair_sum, m)});
  }
  return result;
}

DeltaResult batch_add(const PointSet& s, const PointSet& c, int threads) {
  const std::size_t n = s.size();
  const std::size_t k = c.size();
  DeltaResult result;
  result.entries.reserve(k);
  if (k == 0) return result;

  {
    std::unordered_set<std::uint64_t> base;
    base.reserve(n * 2 + 1);
    for (const Point& p : s) base.insert(pack(p));
    std::unordered_set<std::uint64_t> cand;
    cand.reserve(k * 2 + 1);
    for (const Point& q : c) {
      if (base.contains(pack(q))) {
        throw OverlapError("candidate " + to_string(q) + " is already in the base set");
      }
      if (!cand.insert(pack(q)).second) {
        Violation v;
        v.kind = Violation::Kind::kDuplicate;
        v.a = v.b = q;
        throw GeneralPositionError(std::move(v));
      }
    }
  }

  //  Slots: base points first, candidates after.
  std::vector<Point> pts;
  pts.reserve(n + k);
  pts.insert(pts.end(), s.begin(), s.end());
  pts.insert(pts.end(), c.begin(), c.end());
  const std::size_t total = n + k;
  const std::span<const Point> all(pts);
  const std::span<const Point> base_span(pts.data(), n);

  const int t = detail::clamp_threads(threads, total);
  std::vector<std::int64_t> row_f(k, 0);
  std::vector<std::int64_t> f_part(static_cast<std::size_t>(t), 0);
  std::vector<std::vector<std::int64_t>> col_part(static_cast<std::size_t>(t));
  std::vector<std::vector<std::int64_t>> corr_part(static_cast<std::size_t>(t));

  detail::parallel_chunks(total, t, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& col = col_part[chunk];
    auto& corr = corr_part[chunk];
    col.assign(k, 0);
    corr.assign(k, 0);
    AnchorScratch ws;
    ws.resize(total);
    for (std::size_t a = begin; a < end; ++a) {
      if (a < n) {
        // Base anchor: sweep every other slot. Weight 1 on base points and 0
        // on candidates makes the left sums the base-set left counts, read
        // off at base pivots (rows of the pair sum) and at candidate pivots
        // (their columns).
        detail::sort_ccw(pts[a], all, a, ws.dirs, ws.order);
        for (const std::int32_t slot : ws.order) {
          ws.weights[slot] = slot < static_cast<std::int32_t>(n) ? 1 : 0;
        }
        detail::left_sums_inplace(pts[a], all, ws.order, ws.weights, ws.lam_row);
        std::int64_t rf = 0;
        for (const std::int32_t slot : ws.order) {
          if (slot < static_cast<std::int32_t>(n)) {
            rf += choose2(ws.lam_row[slot]);
          } else {
            col[slot - n] += choose2(ws.lam_row[slot]);
          }
        }
        f_part[chunk] += rf;

        // Adding p increments the left count of every base pair (a, r)
        // whose left half-plane gains p, raising its pair count by the old
        // left count. Same complement trick as in batch_remove, with the
        // candidates riding along at weight zero so their pivots expose the
        // accumulated correction.
        std::int64_t wtot = 0;
        for (const std::int32_t slot : ws.order) {
          if (slot < static_cast<std::int32_t>(n)) {
            ws.weights[slot] = ws.lam_row[slot];
            wtot += ws.weights[slot];
          } else {
            ws.weights[slot] = 0;
          }
        }
        detail::left_sums_inplace(pts[a], all, ws.order, ws.weights, ws.sums);
        for (std::size_t j = 0; j < k; ++j) {
          corr[j] += wtot - ws.sums[n + j];
        }
      } else {
        // Candidate anchor: only its left counts against the base set are
        // needed, so sweep the base slots alone.
        detail::sort_ccw(pts[a], base_span, std::size_t(-1), ws.dirs, ws.order);
        for (const std::int32_t slot : ws.order) ws.weights[slot] = 1;
        detail::left_sums_inplace(pts[a], base_span, ws.order, ws.weights, ws.lam_row);
        std::int64_t rf = 0;
        for (const std::int32_t slot : ws.order) rf += choose2(ws.lam_row[slot]);
        row_f[a - n] = rf;
      }
    }
  });

  std::int64_t f_all = 0;
  std::vector<std::int64_t> col_f(k, 0);
  std::vector<std::int64_t> correction(k, 0);
  for (int i = 0; i < t; ++i) {
    f_all += f_part[i];
    for (std::size_t j = 0; j < k; ++j) {
      col_f[j] += col_part[i][j];
      correction[j] += corr_part[i][j];
    }
  }

  const std::int64_t m = static_cast<std::int64_t>(n) + 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::int64_t pair_sum = f_all + row_f[j] + col_f[j] + correction[j];
    result.entries.push_back(
        {static_cast<std::int32_t>(j), c[j], assemble(pair_sum, m)});
  }
  return result;
}

DeltaResult batch_move(const PointSet& s, std::size_t p_index, const PointSet& c,
                       int threads) {
  if (p_index >= s.size()) {
    throw NotAMemberError("point index " + std::to_string(p_index) +
                          " is out of range for a set of " + std::to_string(s.size()));
  }
  return batch_add(s.without(p_index), c, threads);
}

}  // namespace rcn
