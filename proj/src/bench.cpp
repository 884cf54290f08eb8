#include "unicyclic/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "unicyclic/decomposition.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/generator.hpp"
#include "unicyclic/matrices.hpp"
#include "unicyclic/oracle.hpp"
#include "unicyclic/pinv.hpp"

namespace unicyclic {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[k] : (xs[k - 1] + xs[k]) / 2.0;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

std::size_t bench_cycle_length(std::size_t n) {
  auto len = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  len -= len % 2;
  return std::min(n - n % 2, std::max<std::size_t>(len, 4));
}

std::vector<BenchRecord> run_benchmark(const BenchOptions& options) {
  std::vector<BenchRecord> records;
  for (std::size_t n : options.sizes) {
    if (n < 4) throw GraphError("benchmark sizes must be at least 4");
    const std::size_t len = options.cycle_length.value_or(bench_cycle_length(n));
    for (std::size_t s = 0; s < options.seeds; ++s) {
      BenchRecord rec;
      rec.n = n;
      rec.cycle_length = len;
      rec.seed = options.base_seed + s;
      Graph g = generate_unicyclic({n, len, CycleParity::Even, rec.seed});
      const IncidenceMatrix m(g);

      const auto start = Clock::now();
      const UnicyclicDecomposition d(std::move(g));
      const CombinatorialPinv h = even_unicyclic_pinv(d);
      rec.t_combinatorial = seconds_since(start);

      if (n <= options.oracle_cap) {
        const auto oracle_start = Clock::now();
        const RationalMatrix reference = pinv_rank_factorization(m.matrix());
        rec.t_oracle = seconds_since(oracle_start);
        rec.verified = reference == h.h;
      } else {
        rec.verified = true;
      }
      rec.verified = rec.verified && check_penrose(m.matrix(), h.h).all_pass();
      records.push_back(rec);
    }
  }
  return records;
}

std::vector<BenchRecord> summarize(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, std::vector<const BenchRecord*>> by_size;
  for (const auto& r : records) by_size[r.n].push_back(&r);

  std::vector<BenchRecord> out;
  for (const auto& [n, group] : by_size) {
    BenchRecord s;
    s.n = n;
    s.cycle_length = group.front()->cycle_length;
    s.verified = true;
    std::vector<double> comb;
    std::vector<double> oracle;
    for (const BenchRecord* r : group) {
      if (r->cycle_length != s.cycle_length) s.cycle_length = 0;
      comb.push_back(r->t_combinatorial);
      if (r->t_oracle) oracle.push_back(*r->t_oracle);
      s.verified = s.verified && r->verified;
    }
    s.t_combinatorial = median(comb);
    if (!oracle.empty()) s.t_oracle = median(oracle);
    out.push_back(s);
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = "n,cycle_length,seed,t_combinatorial_s,t_oracle_s,verified\n";
  const auto row = [&](const BenchRecord& r, const std::string& seed) {
    out += std::to_string(r.n) + "," + std::to_string(r.cycle_length) + "," + seed + "," +
           format_seconds(r.t_combinatorial) + "," +
           (r.t_oracle ? format_seconds(*r.t_oracle) : std::string()) + "," +
           (r.verified ? "true" : "false") + "\n";
  };
  for (const auto& r : records) row(r, std::to_string(r.seed));
  for (const auto& s : summarize(records)) row(s, "median");
  return out;
}

}  // namespace unicyclic
