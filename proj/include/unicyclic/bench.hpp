#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unicyclic {

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t seeds = 5;
  std::uint64_t base_seed = 1;
  /// The rational oracle is skipped for n above this.
  std::size_t oracle_cap = 64;
  /// Even cycle length to use; unset picks the largest even length <= sqrt(n)
  /// (at least 4) so that Penrose verification stays quadratic in practice.
  std::optional<std::size_t> cycle_length;
};

struct BenchRecord {
  std::size_t n = 0;
  std::size_t cycle_length = 0;
  std::uint64_t seed = 0;
  double t_combinatorial = 0.0;  // seconds
  std::optional<double> t_oracle;
  bool verified = false;
};

/// Default even cycle length for a benchmark graph on n vertices.
std::size_t bench_cycle_length(std::size_t n);

/// One record per (size, seed) on seeded even unicyclic graphs. The
/// combinatorial pseudoinverse is always Penrose-verified. Throws GraphError
/// for sizes below 4 or an invalid cycle length.
std::vector<BenchRecord> run_benchmark(const BenchOptions& options);

/// Per-size medians over the records of that size; `seed` is unused (0) and
/// `verified` is the conjunction.
std::vector<BenchRecord> summarize(const std::vector<BenchRecord>& records);

/// Header "n,cycle_length,seed,t_combinatorial_s,t_oracle_s,verified", then the
/// records, then one summary row per size whose seed cell reads "median".
/// Skipped oracle timings are empty cells.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace unicyclic
