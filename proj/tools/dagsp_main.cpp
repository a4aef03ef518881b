// Command-line front end: instance generation, single-source and all-pairs
// runs, the sampling-based solver for cyclic graphs, an oracle-differential
// verifier, and the two benchmark experiments.
//
// Exit codes: 0 success, 1 usage error, 2 input format error, 3 algorithmic
// precondition violation (cycle where a DAG is required, negative weight
// where forbidden, exhausted sampling), 4 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dagsp/ancestors.hpp"
#include "dagsp/apsp_cyclic.hpp"
#include "dagsp/apsp_dag.hpp"
#include "dagsp/bench.hpp"
#include "dagsp/error.hpp"
#include "dagsp/graph.hpp"
#include "dagsp/oracles.hpp"
#include "dagsp/order.hpp"
#include "dagsp/sssp.hpp"
#include "dagsp/types.hpp"

namespace {

using namespace dagsp;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  return read_graph_text(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open output file: " + path);
  return out;
}

int run_gen(const GenConfig& cfg, const std::string& out_path) {
  const Graph g = gen_instance(cfg);
  auto out = open_output(out_path);
  write_graph_text(out, g);
  std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges to " << out_path << "\n";
  return 0;
}

int run_sssp(const std::string& graph_path, Vertex source, std::optional<int> t,
             bool use_bf) {
  const Graph g = load_graph(graph_path);
  SsspReport report;
  if (use_bf) {
    report = bellman_ford(g, source);
  } else {
    const int rounds =
        t ? *t : std::max(0, static_cast<int>(g.vertex_count()) - 2);
    report = t_light_sssp(g, source, rounds);
  }
  if (report.negative_cycle) {
    std::cerr << "negative cycle reachable from source " << source << "\n";
    return 3;
  }
  for (std::size_t v = 0; v < report.dist.size(); ++v) {
    if (v > 0) std::cout << ", ";
    std::cout << dist_to_string(report.dist[v]);
  }
  std::cout << "\n";
  return 0;
}

void print_tree_stats(const TreeStats& stats) {
  std::cout << "tree stats: max_leaf=" << stats.max_leaf
            << " mean_leaf=" << stats.mean_leaf
            << " sum_indeg_leaf=" << stats.sum_indeg_leaf << "\n";
}

int run_apsp(const std::string& graph_path, const std::string& algo,
             const std::string& out_path) {
  const Graph g = load_graph(graph_path);
  DistMatrix dist;
  if (algo == "baseline") {
    dist = apsp_standard_dag(g);
  } else if (algo == "lex") {
    LexApspResult result = apsp_lex_first(g);
    print_tree_stats(result.stats);
    dist = std::move(result.dist);
  } else {  // bidir
    BidirApspResult result = apsp_bidirectional(g);
    const bool forward = result.winner == SweepDirection::forward;
    std::cout << "winning sweep: " << (forward ? "forward" : "backward") << "\n";
    const Graph oriented = forward ? g : reverse_graph(g);
    print_tree_stats(tree_stats(result.trees, oriented));
    dist = std::move(result.dist);
  }
  auto out = open_output(out_path);
  write_dist_csv(out, dist);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_cyclic(const std::string& graph_path, const SampleConfig& cfg,
               const std::string& out_path) {
  const Graph g = load_graph(graph_path);
  const CyclicApspResult result = apsp_large_cycles(g, cfg);

  auto out = open_output(out_path);
  write_dist_csv(out, result.dist);

  auto meta = open_output(out_path + ".json");
  meta << "{\n"
       << "  \"sample_size\": " << result.sample.size() << ",\n"
       << "  \"retries_used\": " << result.retries_used << ",\n"
       << "  \"d\": " << cfg.d << ",\n"
       << "  \"c\": " << cfg.c << ",\n"
       << "  \"seed\": " << cfg.seed << ",\n"
       << "  \"sample\": [";
  for (std::size_t i = 0; i < result.sample.size(); ++i)
    meta << (i ? ", " : "") << result.sample[i];
  meta << "]\n}\n";

  std::cout << "sample size " << result.sample.size() << ", retries "
            << result.retries_used << ", wrote " << out_path << "\n";
  return 0;
}

// Oracle-differential checks on one instance; prints one line per property.
int run_verify(const std::string& graph_path, int t) {
  const Graph g = load_graph(graph_path);
  const Vertex n = g.vertex_count();
  bool any_fail = false;

  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) any_fail = true;
  };
  auto skip = [](const std::string& name, const std::string& why) {
    std::cout << "SKIP " << name << " (" << why << ")\n";
  };

  const FloydWarshallResult fw = floyd_warshall(g);
  const std::vector<Vertex> sources = [&] {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < std::min<Vertex>(n, 16); ++v) s.push_back(v);
    return s;
  }();

  {
    bool ok = true;
    for (Vertex s : sources) {
      const BfsOrder ord = bfs_order(g, s);
      // Levels must match minimum edge counts from an independent relaxation.
      std::vector<int> hops(static_cast<std::size_t>(n), -1);
      hops[s] = 0;
      for (Vertex round = 0; round < n; ++round)
        for (const Edge& e : g.edges())
          if (hops[e.tail] >= 0 && (hops[e.head] < 0 || hops[e.head] > hops[e.tail] + 1))
            hops[e.head] = hops[e.tail] + 1;
      for (Vertex v = 0; v < n; ++v)
        if (ord.level[v] != hops[v]) ok = false;
    }
    report("bfs-levels-match-minimum-edge-counts", ok);
  }

  if (fw.negative_cycle) {
    skip("bellman-ford-matches-floyd-warshall", "negative cycle present");
    skip("bounded-sweeps-at-full-budget-match-bellman-ford", "negative cycle present");
  } else {
    bool ok = true;
    for (Vertex s : sources) {
      const SsspReport bf = bellman_ford(g, s);
      if (bf.negative_cycle) ok = false;
      for (Vertex v = 0; v < n; ++v)
        if (bf.dist[v] != fw.dist(s, v)) ok = false;
    }
    report("bellman-ford-matches-floyd-warshall", ok);

    ok = true;
    for (Vertex s : sources) {
      const SsspReport full = t_light_sssp(g, s, std::max(0, n - 2));
      if (full.dist != bellman_ford(g, s).dist) ok = false;
    }
    report("bounded-sweeps-at-full-budget-match-bellman-ford", ok);
  }

  {
    bool ok = true;
    for (Vertex s : sources) {
      const SsspReport bounded = t_light_sssp(g, s, t);
      const DistVector bound = t_light_oracle(g, s, t);
      for (Vertex v = 0; v < n; ++v)
        if (bounded.dist[v] > bound[v]) ok = false;
    }
    report("bounded-sweeps-within-walk-budget-bound", ok);
  }

  bool is_dag = true;
  TopoOrder topo;
  try {
    topo = topo_sort(g);
  } catch (const CycleDetected&) {
    is_dag = false;
  }
  if (!is_dag) {
    skip("apsp-suite", "graph is not acyclic");
    return any_fail ? 4 : 0;
  }

  {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (topo.position[e.tail] >= topo.position[e.head]) ok = false;
    for (Vertex i = 0; i < n; ++i)
      if ((g.in_degree(topo.order[i]) == 0) != (i < topo.source_count)) ok = false;
    report("topological-order-valid-and-sources-first", ok);
  }

  const AncestorSets anc = ancestor_sets(g, topo);
  {
    bool ok = true;
    for (Vertex v = 0; v < n; ++v) {
      // Reverse reachability by DFS over incoming arcs.
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> stack{v};
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const Arc& a : g.in(x))
          if (!seen[a.to]) {
            seen[a.to] = 1;
            stack.push_back(a.to);
          }
      }
      for (Vertex u = 0; u < n; ++u)
        if ((u != v && seen[u]) != anc.is_ancestor(u, v)) ok = false;
    }
    report("ancestor-sets-match-reverse-reachability", ok);
  }

  const LexApspResult lex = apsp_lex_first(g, topo, anc, /*audit_splice=*/true);
  report("output-sensitive-apsp-matches-floyd-warshall", lex.dist == fw.dist);
  report("output-sensitive-apsp-matches-baseline-sweep",
         lex.dist == apsp_standard_dag(g, topo));
  report("bidirectional-apsp-matches", apsp_bidirectional(g).dist == lex.dist);

  {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v)
      for (Vertex u = 0; u < n && ok; ++u) {
        if (u == v) continue;
        const auto path = extract_path(lex.trees, u, v);
        if (path.empty()) {
          if (!lex.dist(u, v).is_infinite()) ok = false;
          continue;
        }
        Weight total = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          Weight best = 0;
          bool found = false;
          for (const Arc& a : g.out(path[i]))
            if (a.to == path[i + 1] && (!found || a.weight < best)) {
              best = a.weight;
              found = true;
            }
          if (!found) ok = false;
          total += best;
        }
        if (lex.dist(u, v) != ExtDist(total)) ok = false;
      }
    report("tree-paths-realize-reported-distances", ok);
  }

  {
    std::int64_t ancestor_total = 0;
    for (Vertex v = 0; v < n; ++v) ancestor_total += anc.count(v);
    const bool ok =
        lex.work.select_cost <= static_cast<std::uint64_t>(lex.stats.sum_indeg_leaf) &&
        lex.work.splice_steps <= static_cast<std::uint64_t>(n + ancestor_total);
    report("work-counters-within-accounting-bounds", ok);
  }

  if (n <= 12) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const auto expected = lex_first_paths_bruteforce(g, topo, v);
      for (Vertex u = 0; u < n && ok; ++u) {
        if (u == v) continue;
        if (extract_path(lex.trees, u, v) != expected[u]) ok = false;
      }
    }
    report("trees-encode-canonical-first-paths", ok);
  } else {
    skip("trees-encode-canonical-first-paths", "instance above enumeration cap");
  }

  return any_fail ? 4 : 0;
}

int run_bench_quality(Vertex n, const std::vector<double>& ps, int seeds,
                      std::uint64_t seed0, Vertex source, int max_iter,
                      Weight weight_lo, Weight weight_hi, bool stop_when_exact,
                      int jobs, const std::string& out_path) {
  if (max_iter <= 0) max_iter = 2 * static_cast<int>(n) + 2;

  struct Task {
    GenConfig cfg;
  };
  std::vector<Task> tasks;
  for (double p : ps)
    for (int i = 0; i < seeds; ++i) {
      GenConfig cfg;
      cfg.n = n;
      cfg.p = p;
      cfg.seed = seed0 + static_cast<std::uint64_t>(i);
      cfg.weight_lo = weight_lo;
      cfg.weight_hi = weight_hi;
      cfg.mode = GraphMode::digraph;
      tasks.push_back({cfg});
    }

  std::vector<std::vector<QualityRecord>> per_task(tasks.size());
  jobs = std::max(1, jobs);
  auto worker = [&](int offset) {
    for (std::size_t i = static_cast<std::size_t>(offset); i < tasks.size();
         i += static_cast<std::size_t>(jobs))
      per_task[i] =
          run_quality_experiment(tasks[i].cfg, source, max_iter, stop_when_exact);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }

  std::vector<QualityRecord> records;
  for (const auto& part : per_task)
    records.insert(records.end(), part.begin(), part.end());
  std::stable_sort(records.begin(), records.end(),
                   [](const QualityRecord& a, const QualityRecord& b) {
                     return std::tie(a.n, a.p, a.seed, a.iter) <
                            std::tie(b.n, b.p, b.seed, b.iter);
                   });

  auto out = open_output(out_path);
  write_quality_csv(out, records);

  GenConfig echo;
  echo.n = n;
  echo.p = ps.front();
  echo.seed = seed0;
  echo.weight_lo = weight_lo;
  echo.weight_hi = weight_hi;
  echo.mode = GraphMode::digraph;
  std::ostringstream extra;
  extra << "{\"experiment\":\"quality\",\"seeds\":" << seeds
        << ",\"source\":" << source << ",\"max_iter\":" << max_iter
        << ",\"p_values\":[";
  for (std::size_t i = 0; i < ps.size(); ++i)
    extra << (i ? "," : "") << format_probability(ps[i]);
  extra << "]}";
  auto cfg_out = open_output(out_path + ".json");
  write_config_json(cfg_out, echo, extra.str());

  std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
  return 0;
}

int run_bench_timing(const GenConfig& cfg, int trials,
                     const std::vector<std::string>& algos,
                     const std::string& out_path) {
  const auto records = run_timing_experiment(cfg, trials, algos);
  auto out = open_output(out_path);
  write_timing_csv(out, records);

  std::ostringstream extra;
  extra << "{\"experiment\":\"timing\",\"trials\":" << trials << ",\"algorithms\":[";
  for (std::size_t i = 0; i < algos.size(); ++i)
    extra << (i ? "," : "") << '"' << algos[i] << '"';
  extra << "]}";
  auto cfg_out = open_output(out_path + ".json");
  write_config_json(cfg_out, cfg, extra.str());

  for (const TimingRecord& r : records)
    std::cout << r.algorithm << ": mean " << r.mean_ms << " ms, stddev "
              << r.stddev_ms << " ms over " << r.trials << " trials\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortest-paths toolkit for weighted digraphs and DAGs"};
  app.require_subcommand(1);

  // gen
  GenConfig gen_cfg;
  std::string gen_mode = "dag";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_cfg.n, "vertex count")->required();
  gen->add_option("--p", gen_cfg.p, "edge probability")->required();
  gen->add_option("--seed", gen_cfg.seed, "PRNG seed");
  gen->add_option("--weight-lo", gen_cfg.weight_lo, "minimum weight");
  gen->add_option("--weight-hi", gen_cfg.weight_hi, "maximum weight");
  gen->add_option("--mode", gen_mode, "dag or digraph")
      ->check(CLI::IsMember({"dag", "digraph"}));
  gen->add_option("--out", gen_out, "output path")->required();

  // sssp
  std::string sssp_graph;
  Vertex sssp_source = 0;
  std::optional<int> sssp_t;
  bool sssp_bf = false;
  auto* sssp = app.add_subcommand("sssp", "single-source shortest paths");
  sssp->add_option("--graph", sssp_graph, "graph file")->required();
  sssp->add_option("--source", sssp_source, "source vertex");
  auto* t_opt = sssp->add_option("--t", sssp_t, "sweep rounds (default: full run)");
  sssp->add_flag("--bf", sssp_bf, "use Bellman-Ford instead")->excludes(t_opt);

  // apsp
  std::string apsp_graph, apsp_algo = "lex", apsp_out;
  auto* apsp = app.add_subcommand("apsp", "all-pairs shortest paths on a DAG");
  apsp->add_option("--graph", apsp_graph, "graph file")->required();
  apsp->add_option("--algo", apsp_algo, "baseline, lex, or bidir")
      ->check(CLI::IsMember({"baseline", "lex", "bidir"}));
  apsp->add_option("--out", apsp_out, "distance CSV path")->required();

  // cyclic
  std::string cyc_graph, cyc_out;
  SampleConfig cyc_cfg;
  auto* cyclic = app.add_subcommand("cyclic", "sampling APSP for long-cycle digraphs");
  cyclic->add_option("--graph", cyc_graph, "graph file")->required();
  cyclic->add_option("--d", cyc_cfg.d, "assumed minimum cycle length")->required();
  cyclic->add_option("--c", cyc_cfg.c, "oversampling constant");
  cyclic->add_option("--seed", cyc_cfg.seed, "PRNG seed");
  cyclic->add_option("--max-retries", cyc_cfg.max_retries, "resampling budget");
  cyclic->add_option("--out", cyc_out, "distance CSV path")->required();

  // verify
  std::string verify_graph;
  int verify_t = 2;
  auto* verify = app.add_subcommand("verify", "oracle-differential checks");
  verify->add_option("--graph", verify_graph, "graph file")->required();
  verify->add_option("--t", verify_t, "sweep rounds for the bound check");

  // bench-quality
  Vertex bq_n = 100;
  std::vector<double> bq_p;
  int bq_seeds = 100;
  std::uint64_t bq_seed0 = 0;
  Vertex bq_source = 0;
  int bq_max_iter = 0;
  Weight bq_lo = -1000, bq_hi = 1000;
  bool bq_stop = false;
  int bq_jobs = 1;
  std::string bq_out;
  auto* bq = app.add_subcommand("bench-quality", "per-iteration estimate quality");
  bq->add_option("--n", bq_n, "vertex count");
  bq->add_option("--p", bq_p, "edge probabilities (repeatable)")->required();
  bq->add_option("--seeds", bq_seeds, "instances per probability");
  bq->add_option("--seed0", bq_seed0, "first seed");
  bq->add_option("--source", bq_source, "source vertex");
  bq->add_option("--max-iter", bq_max_iter, "iterations (default 2n+2)");
  bq->add_option("--weight-lo", bq_lo, "minimum weight");
  bq->add_option("--weight-hi", bq_hi, "maximum weight");
  bq->add_flag("--stop-when-exact", bq_stop, "stop once both sides are exact");
  bq->add_option("--jobs", bq_jobs, "parallel workers");
  bq->add_option("--out", bq_out, "CSV path")->required();

  // bench-timing
  GenConfig bt_cfg;
  bt_cfg.mode = GraphMode::dag;
  int bt_trials = 10;
  std::vector<std::string> bt_algos = {"baseline", "lex"};
  std::string bt_out;
  auto* bt = app.add_subcommand("bench-timing", "APSP wall-clock comparison");
  bt->add_option("--n", bt_cfg.n, "vertex count")->required();
  bt->add_option("--p", bt_cfg.p, "edge probability")->required();
  bt->add_option("--trials", bt_trials, "instances to time");
  bt->add_option("--seed", bt_cfg.seed, "first instance seed");
  bt->add_option("--weight-lo", bt_cfg.weight_lo, "minimum weight");
  bt->add_option("--weight-hi", bt_cfg.weight_hi, "maximum weight");
  bt->add_option("--algos", bt_algos, "baseline, lex, bidir, cyclic");
  bt->add_option("--out", bt_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      gen_cfg.mode = gen_mode == "dag" ? GraphMode::dag : GraphMode::digraph;
      return run_gen(gen_cfg, gen_out);
    }
    if (sssp->parsed()) return run_sssp(sssp_graph, sssp_source, sssp_t, sssp_bf);
    if (apsp->parsed()) return run_apsp(apsp_graph, apsp_algo, apsp_out);
    if (cyclic->parsed()) return run_cyclic(cyc_graph, cyc_cfg, cyc_out);
    if (verify->parsed()) return run_verify(verify_graph, verify_t);
    if (bq->parsed())
      return run_bench_quality(bq_n, bq_p, bq_seeds, bq_seed0, bq_source,
                               bq_max_iter, bq_lo, bq_hi, bq_stop, bq_jobs, bq_out);
    if (bt->parsed()) return run_bench_timing(bt_cfg, bt_trials, bt_algos, bt_out);
  } catch (const CycleDetected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NegativeWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResidualCyclic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
