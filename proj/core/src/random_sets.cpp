#include "rcn/random_sets.hpp"

#include <random>
#include <unordered_set>
#include <vector>

#include "rcn/detail/rng.hpp"

namespace rcn {

namespace {

inline std::uint64_t pack(const Point& p) noexcept {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
}

Point fresh_point(std::mt19937_64& rng, Coord half_range,
                  std::unordered_set<std::uint64_t>& used) {
  for (;;) {
    const Point p{detail::uniform_coord(rng, half_range), detail::uniform_coord(rng, half_range)};
    if (used.insert(pack(p)).second) return p;
  }
}

}  // namespace

PointSet generate_random_point_set(std::int32_t n, std::uint64_t seed, Coord half_range) {
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> used;
  used.reserve(static_cast<std::size_t>(n) * 2 + 1);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::int32_t i = 0; i < n; ++i) pts.push_back(fresh_point(rng, half_range, used));

  PointSet s(std::move(pts));
  // Collinear triples are vanishingly rare at a wide coordinate range;
  // replace one endpoint of a witnessing triple until validation passes.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto v = find_general_position_violation(s);
    if (!v) return s;
    const std::int64_t victim = v->ic >= 0 ? v->ic : v->ib;
    used.erase(pack(s[static_cast<std::size_t>(victim)]));
    s.replace(static_cast<std::size_t>(victim), fresh_point(rng, half_range, used));
  }
  throw Error("could not reach general position; the coordinate range is too small for n");
}

PointSet generate_random_candidates(const PointSet& s, std::int32_t k, std::uint64_t seed,
                                    Coord half_range) {
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> used;
  used.reserve(s.size() * 2 + static_cast<std::size_t>(k) * 2 + 1);
  for (const Point& p : s) used.insert(pack(p));

  std::vector<Point> joint(s.begin(), s.end());
  for (std::int32_t i = 0; i < k; ++i) joint.push_back(fresh_point(rng, half_range, used));
  PointSet all(std::move(joint));

  const std::size_t n = s.size();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto v = find_general_position_violation(all);
    if (!v) {
      std::vector<Point> cand(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());
      return PointSet(std::move(cand));
    }
    // The base set is assumed valid, so some witness index is a candidate.
    std::int64_t victim = -1;
    for (const std::int64_t idx : {v->ic, v->ib, v->ia}) {
      if (idx >= static_cast<std::int64_t>(n)) {
        victim = idx;
        break;
      }
    }
    if (victim < 0) throw Error("base set of generate_random_candidates is not in general position");
    used.erase(pack(all[static_cast<std::size_t>(victim)]));
    all.replace(static_cast<std::size_t>(victim), fresh_point(rng, half_range, used));
  }
  throw Error("could not reach joint general position; the coordinate range is too small");
}

}  // namespace rcn
