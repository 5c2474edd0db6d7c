// Compares the serial reference implementations against the OpenMP paths:
// graph enumeration and the bench sweep. Results must match exactly; the
// table reports wall times and speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "mixdom/bench.hpp"
#include "mixdom/enumeration.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mixdom;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

bool same_records(const BenchResult& a, const BenchResult& b) {
  if (a.records.size() != b.records.size()) return false;
  for (size_t i = 0; i < a.records.size(); i++) {
    const BenchRecord &x = a.records[i], &y = b.records[i];
    if (x.instance != y.instance || x.n != y.n || x.m != y.m || x.method != y.method ||
        !(x.approx_weight == y.approx_weight) || x.exact_weight != y.exact_weight ||
        x.ratio != y.ratio)
      return false;
  }
  return a.max_ratio == b.max_ratio;
}

}  // namespace

int main(int argc, char** argv) {
  int n = 7;
  if (argc > 1) {
    n = std::atoi(argv[1]);
    if (argc > 2 || n < 1 || n > 7) {
      std::fprintf(stderr, "usage: parbench [n]   (enumeration size, 1..7, default 7)\n");
      return 2;
    }
  }
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::printf("parbench: %d thread(s) available\n\n", threads);
  std::printf("%-28s %12s %12s %8s %s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "match");

  double t0 = now_ms();
  auto serial = connected_canonical_masks_serial(n);
  double ts = now_ms() - t0;
  t0 = now_ms();
  auto parallel = connected_canonical_masks(n);
  double tp = now_ms() - t0;
  std::printf("%-28s %12.1f %12.1f %7.2fx %s\n",
              ("enumeration n=" + std::to_string(n)).c_str(), ts, tp, ts / tp,
              serial == parallel ? "yes" : "NO");

  BenchConfig cfg;
  cfg.n_min = 8;
  cfg.n_max = 10;
  cfg.p_list = {0.2, 0.5, 0.8};
  cfg.weights = {WeightConfig(Rational(1), Rational(1)), WeightConfig(Rational(1), Rational(2))};
  cfg.trials = 12;
  cfg.seed = 7;
  cfg.exact_cap = 10;
  cfg.threads = 1;
  t0 = now_ms();
  BenchResult rs = run_bench(cfg);
  ts = now_ms() - t0;
  cfg.threads = threads;
  t0 = now_ms();
  BenchResult rp = run_bench(cfg);
  tp = now_ms() - t0;
  std::printf("%-28s %12.1f %12.1f %7.2fx %s\n", "bench sweep 8..10", ts, tp, ts / tp,
              same_records(rs, rp) ? "yes" : "NO");

  bool ok = serial == parallel && same_records(rs, rp);
  std::printf("\n%s\n", ok ? "parallel output matches serial reference" : "MISMATCH DETECTED");
  return ok ? 0 : 1;
}
