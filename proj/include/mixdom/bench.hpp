#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mixdom/domination.hpp"
#include "mixdom/solvers.hpp"

namespace mixdom {

struct BenchConfig {
  int n_min = 5;
  int n_max = 8;
  std::vector<double> p_list = {0.2, 0.5, 0.8};
  std::vector<WeightConfig> weights;
  int trials = 10;  // instances per (n, p) pair
  std::uint64_t seed = 1;
  int exact_cap = 10;  // largest n the exact oracle is run on
  std::uint64_t node_budget = kDefaultNodeBudget;
  int threads = 0;  // 0 = library default
  bool with_times = false;
};

struct BenchRecord {
  int instance = 0;
  int n = 0;
  int m = 0;
  Rational wv, we;
  Method method = Method::Exact;
  Rational approx_weight;
  std::optional<Rational> exact_weight;
  std::optional<Rational> ratio;
  double wall_ms = 0.0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::optional<Rational> max_ratio;
};

// Deterministic sweep over G(n, p) instances: instance k is generated from
// seed + k regardless of thread count, and records come back in (instance,
// weight) order, so two runs with the same config produce identical results.
// Only wall_ms varies, and the CSV omits it unless with_times is set.
BenchResult run_bench(const BenchConfig& cfg);

// Versioned CSV: a schema comment, one row per (instance, weight config), and
// a trailing max-ratio summary comment.
void write_bench_csv(const BenchResult& res, bool with_times, std::ostream& out);

}  // namespace mixdom
