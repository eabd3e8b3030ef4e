#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rcn {

struct BenchRecord {
  std::int32_t n = 0;
  std::string op;
  std::int32_t trial = 0;
  std::int64_t nanos = 0;
};

/// Raw timings of one scaling run. Op names: "cr_full" (single from-scratch
/// crossing count), "batch_remove" (all n removals), "batch_add" (n random
/// candidates).
struct BenchResult {
  std::vector<BenchRecord> records;

  std::int64_t median_nanos(const std::string& op, std::int32_t n) const;
  std::vector<std::int32_t> sizes() const;
};

/// Times the three operations on seeded random inputs per size. Input
/// generation happens outside the timed regions.
BenchResult run_scaling_bench(std::span<const std::int32_t> sizes, int trials,
                              std::uint64_t seed, int threads = 1);

/// Ordinary least squares slope of log(median nanos) vs log(n) for one op.
double loglog_slope(const BenchResult& r, const std::string& op);

/// CSV with header "n,op,trial,nanos".
void write_bench_csv(std::ostream& out, const BenchResult& r);

}  // namespace rcn
