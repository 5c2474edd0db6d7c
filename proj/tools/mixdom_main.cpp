// mixdom: weighted mixed domination toolkit CLI.
// Exit codes: 0 success, 1 failed verification, 2 usage or input errors,
// 3 exact budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixdom/bench.hpp"
#include "mixdom/generate.hpp"
#include "mixdom/lpvc.hpp"
#include "mixdom/reductions.hpp"
#include "mixdom/serialize.hpp"
#include "mixdom/solvers.hpp"

namespace {

using namespace mixdom;

int env_threads() {
  const char* s = std::getenv("MIXDOM_THREADS");
  if (!s) return 0;
  int v = std::atoi(s);
  return v > 0 ? v : 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct SolveOpts {
  std::string graph, wv, we, mode = "auto", out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_solve(const SolveOpts& o) {
  Graph g = read_graph_file(o.graph);
  WeightConfig w(Rational::parse(o.wv), Rational::parse(o.we));
  SolveMode mode = o.mode == "exact"   ? SolveMode::Exact
                   : o.mode == "approx" ? SolveMode::Approx
                                        : SolveMode::Auto;
  SolveOutcome res = solve(g, w, mode, o.budget);
  std::ofstream file;
  std::ostream& out = open_out(file, o.out);
  if (!res.solved) {
    ordered_json j;
    j["status"] = "unsolved";
    j["budget"] = o.budget;
    j["nodes"] = res.nodes;
    j["incumbent"] = solution_to_json(res.result.solution, w, res.result.weight,
                                      res.result.method, res.result.guarantee);
    out << j.dump(2) << "\n";
    return 3;
  }
  out << solution_to_json(res.result.solution, w, res.result.weight, res.result.method,
                          res.result.guarantee)
             .dump(2)
      << "\n";
  return 0;
}

struct VerifyOpts {
  std::string graph, solution, wv, we;
};

int run_verify(const VerifyOpts& o) {
  Graph g = read_graph_file(o.graph);
  std::ifstream sf(o.solution);
  if (!sf) throw std::runtime_error("cannot open solution file: " + o.solution);
  nlohmann::json j = nlohmann::json::parse(sf);
  SolutionDoc doc = solution_from_json(j);
  Rational wv, we;
  if (!o.wv.empty())
    wv = Rational::parse(o.wv);
  else if (doc.wv)
    wv = *doc.wv;
  else
    throw std::invalid_argument("no w_v: pass --wv or include it in the solution file");
  if (!o.we.empty())
    we = Rational::parse(o.we);
  else if (doc.we)
    we = *doc.we;
  else
    throw std::invalid_argument("no w_e: pass --we or include it in the solution file");
  WeightConfig w(wv, we);
  DominationCheck chk = check_mixed_domination(g, doc.set);
  WeightedValue val = weight(doc.set, w);
  if (chk.dominating) {
    std::cout << "valid\nweight " << val.value.str() << "\n";
    return 0;
  }
  std::cout << "invalid\n";
  if (std::holds_alternative<VertexId>(*chk.witness))
    std::cout << "witness vertex " << std::get<VertexId>(*chk.witness) << "\n";
  else {
    const Edge& e = std::get<Edge>(*chk.witness);
    std::cout << "witness edge " << e.u << " " << e.v << "\n";
  }
  std::cout << "weight " << val.value.str() << "\n";
  return 1;
}

struct GenOpts {
  std::string kind, out;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
};

int run_gen(const GenOpts& o) {
  auto need = [&](size_t k) {
    if (o.params.size() != k)
      throw std::invalid_argument("gen " + o.kind + " expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  auto as_int = [](const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
  };
  Graph g;
  if (o.kind == "gnp") {
    need(2);
    g = gen_gnp(as_int(o.params[0]), std::stod(o.params[1]), o.seed);
  } else if (o.kind == "tree") {
    need(1);
    g = gen_tree(as_int(o.params[0]), o.seed);
  } else if (o.kind == "path") {
    need(1);
    g = gen_path(as_int(o.params[0]));
  } else if (o.kind == "cycle") {
    need(1);
    g = gen_cycle(as_int(o.params[0]));
  } else if (o.kind == "star") {
    need(1);
    g = gen_star(as_int(o.params[0]));
  } else if (o.kind == "complete") {
    need(1);
    g = gen_complete(as_int(o.params[0]));
  } else {
    throw std::invalid_argument("unknown generator: " + o.kind);
  }
  std::ofstream file;
  std::ostream& out = open_out(file, o.out);
  write_graph(g, out);
  return 0;
}

struct LpvcOpts {
  std::string graph, out;
};

int run_lpvc(const LpvcOpts& o) {
  Graph g = read_graph_file(o.graph);
  auto [sol, part] = solve_lpvc_half_integral(g);
  std::ofstream file;
  std::ostream& out = open_out(file, o.out);
  out << partition_to_json(part, sol.objective).dump(2) << "\n";
  return 0;
}

struct ReduceOpts {
  std::string kind, input, out;
  int i = 0;
  int q = 0;
};

std::string default_prefix(const std::string& input, const std::string& suffix) {
  std::string stem = input;
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > stem.rfind('/') + 1)
    stem = stem.substr(0, dot);
  return stem + suffix;
}

int run_reduce(const ReduceOpts& o) {
  Graph out_graph;
  ordered_json labels;
  std::string prefix = o.out;
  if (o.kind == "gi") {
    Graph g = read_graph_file(o.input);
    GiGadget gadget = build_gi(g, o.i);
    out_graph = gadget.graph;
    labels = gi_labels_json(gadget);
    if (prefix.empty()) prefix = default_prefix(o.input, ".gi" + std::to_string(o.i));
  } else {
    SetCoverInstance sc = read_setcover_file(o.input);
    SetCoverGadget gadget =
        build_setcover_gadget(sc, o.q > 0 ? std::optional<int>(o.q) : std::nullopt);
    out_graph = gadget.graph;
    labels = setcover_labels_json(gadget);
    if (prefix.empty()) prefix = default_prefix(o.input, ".gadget");
  }
  std::ofstream gf(prefix + ".graph");
  if (!gf) throw std::runtime_error("cannot write " + prefix + ".graph");
  write_graph(out_graph, gf);
  std::ofstream lf(prefix + ".labels.json");
  if (!lf) throw std::runtime_error("cannot write " + prefix + ".labels.json");
  lf << labels.dump(2) << "\n";
  std::cout << "wrote " << prefix << ".graph (" << out_graph.num_vertices() << " vertices, "
            << out_graph.num_edges() << " edges) and " << prefix << ".labels.json\n";
  return 0;
}

struct BenchOpts {
  std::string n_range = "5:8", p_list = "0.2,0.5,0.8", weights_list = "1:1,1:2", out;
  int trials = 10;
  std::uint64_t seed = 1;
  int exact_cap = 10;
  std::uint64_t budget = kDefaultNodeBudget;
  int threads = 0;
  bool times = false;
};

int run_bench_cmd(const BenchOpts& o) {
  BenchConfig cfg;
  auto range = split(o.n_range, ':');
  if (range.size() == 1) {
    cfg.n_min = cfg.n_max = std::stoi(range[0]);
  } else if (range.size() == 2) {
    cfg.n_min = std::stoi(range[0]);
    cfg.n_max = std::stoi(range[1]);
  } else {
    throw std::invalid_argument("bad --n-range, expected 'a:b'");
  }
  cfg.p_list.clear();
  for (const std::string& p : split(o.p_list, ',')) cfg.p_list.push_back(std::stod(p));
  for (const std::string& pair : split(o.weights_list, ',')) {
    auto parts = split(pair, ':');
    if (parts.size() != 2) throw std::invalid_argument("bad --weights-list entry: " + pair);
    cfg.weights.emplace_back(Rational::parse(parts[0]), Rational::parse(parts[1]));
  }
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.exact_cap = o.exact_cap;
  cfg.node_budget = o.budget;
  cfg.threads = o.threads > 0 ? o.threads : env_threads();
  cfg.with_times = o.times;
  BenchResult res = run_bench(cfg);
  std::ofstream file;
  std::ostream& out = open_out(file, o.out);
  write_bench_csv(res, o.times, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted mixed domination toolkit"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance, print the solution as JSON");
  solve_cmd->add_option("graph", solve_opts.graph, "graph file")->required();
  solve_cmd->add_option("--wv", solve_opts.wv, "vertex weight (rational)")->required();
  solve_cmd->add_option("--we", solve_opts.we, "edge weight (rational)")->required();
  solve_cmd->add_option("--mode", solve_opts.mode, "exact, approx, or auto")
      ->check(CLI::IsMember({"exact", "approx", "auto"}));
  solve_cmd->add_option("--budget", solve_opts.budget, "exact search node budget");
  solve_cmd->add_option("-o,--out", solve_opts.out, "output file (default stdout)");

  VerifyOpts verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against a graph");
  verify_cmd->add_option("graph", verify_opts.graph, "graph file")->required();
  verify_cmd->add_option("solution", verify_opts.solution, "solution JSON file")->required();
  verify_cmd->add_option("--wv", verify_opts.wv, "vertex weight override");
  verify_cmd->add_option("--we", verify_opts.we, "edge weight override");

  GenOpts gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->add_option("kind", gen_opts.kind, "gnp | tree | path | cycle | star | complete")
      ->required();
  gen_cmd->add_option("params", gen_opts.params, "generator parameters");
  gen_cmd->add_option("--seed", gen_opts.seed, "PRNG seed");
  gen_cmd->add_option("-o,--out", gen_opts.out, "output file (default stdout)");

  LpvcOpts lpvc_opts;
  auto* lpvc_cmd = app.add_subcommand("lpvc", "print the half-integral LP partition as JSON");
  lpvc_cmd->add_option("graph", lpvc_opts.graph, "graph file")->required();
  lpvc_cmd->add_option("-o,--out", lpvc_opts.out, "output file (default stdout)");

  ReduceOpts reduce_opts;
  auto* reduce_cmd = app.add_subcommand("reduce", "build a gadget graph plus label sidecar");
  reduce_cmd->add_option("kind", reduce_opts.kind, "gi | setcover")
      ->required()
      ->check(CLI::IsMember({"gi", "setcover"}));
  reduce_cmd->add_option("input", reduce_opts.input, "graph file (gi) or set cover file")
      ->required();
  reduce_cmd->add_option("--i", reduce_opts.i, "pendant pair count for gi");
  reduce_cmd->add_option("--q", reduce_opts.q, "explicit q override for setcover");
  reduce_cmd->add_option("-o,--out", reduce_opts.out, "output prefix");

  BenchOpts bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "sweep random instances, write CSV");
  bench_cmd->add_option("--n-range", bench_opts.n_range, "instance sizes, 'a:b'");
  bench_cmd->add_option("--p-list", bench_opts.p_list, "edge probabilities, comma separated");
  bench_cmd->add_option("--weights-list", bench_opts.weights_list,
                        "weight pairs 'wv:we', comma separated");
  bench_cmd->add_option("--trials", bench_opts.trials, "instances per (n, p) pair");
  bench_cmd->add_option("--seed", bench_opts.seed, "PRNG seed");
  bench_cmd->add_option("--exact-cap", bench_opts.exact_cap, "largest n for the exact oracle");
  bench_cmd->add_option("--budget", bench_opts.budget, "exact search node budget");
  bench_cmd->add_option("--threads", bench_opts.threads,
                        "worker threads (default MIXDOM_THREADS or all)");
  bench_cmd->add_flag("--times", bench_opts.times, "fill the wall_ms column (non-deterministic)");
  bench_cmd->add_option("-o,--out", bench_opts.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
    if (gen_cmd->parsed()) return run_gen(gen_opts);
    if (lpvc_cmd->parsed()) return run_lpvc(lpvc_opts);
    if (reduce_cmd->parsed()) return run_reduce(reduce_opts);
    if (bench_cmd->parsed()) return run_bench_cmd(bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
