#include "mixdom/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "mixdom/generate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mixdom {

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 0 || cfg.n_max < cfg.n_min) throw std::invalid_argument("bench: bad n range");
  if (cfg.p_list.empty() || cfg.weights.empty() || cfg.trials < 1)
    throw std::invalid_argument("bench: empty instance space");
  for (double p : cfg.p_list)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bench: p must be in [0, 1]");

  struct Job {
    int n;
    double p;
  };
  std::vector<Job> jobs;
  for (int n = cfg.n_min; n <= cfg.n_max; n++)
    for (double p : cfg.p_list)
      for (int t = 0; t < cfg.trials; t++) jobs.push_back({n, p});

  int w = (int)cfg.weights.size();
  BenchResult res;
  res.records.assign(jobs.size() * w, BenchRecord{});

#ifdef _OPENMP
  int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
  for (int k = 0; k < (int)jobs.size(); k++) {
    Graph g = gen_gnp(jobs[k].n, jobs[k].p, cfg.seed + (std::uint64_t)k);
    for (int wi = 0; wi < w; wi++) {
      const WeightConfig& wc = cfg.weights[wi];
      BenchRecord& rec = res.records[(size_t)k * w + wi];
      rec.instance = k;
      rec.n = g.num_vertices();
      rec.m = g.num_edges();
      rec.wv = wc.wv;
      rec.we = wc.we;
      double t0 = now_ms();
      SolveOutcome ap = solve(g, wc, SolveMode::Auto, cfg.node_budget);
      rec.wall_ms = now_ms() - t0;
      rec.method = ap.result.method;
      rec.approx_weight = ap.result.weight.value;
      if (jobs[k].n <= cfg.exact_cap) {
        ExactResult ex = exact_wmd(g, wc, cfg.node_budget);
        if (ex.solved) {
          rec.exact_weight = ex.best.weight.value;
          if (ex.best.weight.value.is_zero())
            rec.ratio = Rational(1);  // both weights zero: exactly optimal
          else
            rec.ratio = rec.approx_weight / *rec.exact_weight;
        }
      }
    }
  }
  for (const BenchRecord& rec : res.records)
    if (rec.ratio && (!res.max_ratio || *rec.ratio > *res.max_ratio)) res.max_ratio = rec.ratio;
  return res;
}

void write_bench_csv(const BenchResult& res, bool with_times, std::ostream& out) {
  out << "# mixdom bench csv v1\n";
  out << "instance,n,m,wv,we,method,approx_weight,exact_weight,ratio,wall_ms\n";
  for (const BenchRecord& r : res.records) {
    out << r.instance << "," << r.n << "," << r.m << "," << r.wv.str() << "," << r.we.str() << ","
        << method_name(r.method) << "," << r.approx_weight.str() << ","
        << (r.exact_weight ? r.exact_weight->str() : "") << ","
        << (r.ratio ? r.ratio->str() : "") << ",";
    if (with_times) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
      out << buf;
    }
    out << "\n";
  }
  out << "# max_ratio " << (res.max_ratio ? res.max_ratio->str() : "n/a") << "\n";
}

}  // namespace mixdom
