// Acceptance gate: one self-contained check per shipping criterion, each
// printing a single PASS/FAIL line.  Exit status is nonzero when any
// criterion fails.  CSV artifacts for the reproducibility criterion are
// kept in memory and also written under acceptance_artifacts/.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dagsp/ancestors.hpp"
#include "dagsp/apsp_cyclic.hpp"
#include "dagsp/error.hpp"
#include "dagsp/apsp_dag.hpp"
#include "dagsp/bench.hpp"
#include "dagsp/graph.hpp"
#include "dagsp/oracles.hpp"
#include "dagsp/order.hpp"
#include "dagsp/sssp.hpp"
#include "support.hpp"

using namespace dagsp;
using dagsp::testing::gen_chain_dominant_dag;
using dagsp::testing::gen_no_negative_cycles;
using dagsp::testing::gen_planted_cycles;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::string csv;  // reproducibility artifact; empty when not applicable
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ExtDist path_weight(const Graph& g, const std::vector<Vertex>& path) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool found = false;
    Weight best = 0;
    for (const Arc& a : g.out(path[i]))
      if (a.to == path[i + 1] && (!found || a.weight < best)) {
        best = a.weight;
        found = true;
      }
    if (!found) return ExtDist::infinity();
    total += best;
  }
  return ExtDist{total};
}

// Criterion 1: bounded sweeps at full budget, Bellman-Ford, and the
// Floyd-Warshall row all agree on 200 negative-cycle-free digraphs.
Outcome criterion_sssp_equivalence() {
  Outcome out;
  std::ostringstream csv;
  csv << "n,p,seed,ok\n";
  int failures = 0;
  for (Vertex n : {8, 16, 32, 64})
    for (double p : {0.2, 0.5})
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = gen_no_negative_cycles(n, p, seed);
        const FloydWarshallResult fw = floyd_warshall(g);
        bool ok = !fw.negative_cycle;
        if (ok) {
          const SsspReport sweep = t_light_sssp(g, 0, n - 2);
          const SsspReport bf = bellman_ford(g, 0);
          ok = !sweep.negative_cycle && !bf.negative_cycle;
          for (Vertex v = 0; v < n && ok; ++v)
            ok = sweep.dist[v] == bf.dist[v] && bf.dist[v] == fw.dist(0, v);
        }
        if (!ok) ++failures;
        csv << n << ',' << format_probability(p) << ',' << seed << ','
            << (ok ? 1 : 0) << '\n';
      }
  out.pass = failures == 0;
  out.detail = "200 instances, " + std::to_string(failures) + " mismatches";
  out.csv = csv.str();
  return out;
}

// Criterion 2: sweep estimates stay within the walk-budget bound for
// t in {0,1,2,3}, and never increase from one pass to the next.
Outcome criterion_sweep_bound() {
  Outcome out;
  int bound_failures = 0;
  int monotone_failures = 0;
  for (Vertex n : {8, 16, 24, 32})
    for (double p : {0.2, 0.5})
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenConfig cfg;
        cfg.n = n;
        cfg.p = p;
        cfg.seed = seed;
        const Graph g = gen_instance(cfg);
        const BfsOrder ord = bfs_order(g, 0);

        // Pass-by-pass history: snapshots after each of the 7 passes that
        // make up budgets 0 through 3.
        std::vector<DistVector> history;
        DistVector d(static_cast<std::size_t>(n), ExtDist::infinity());
        d[0] = ExtDist::zero();
        history.push_back(d);
        for (int pass = 1; pass <= 7; ++pass) {
          d = pass % 2 == 1 ? forward_pass(g, ord, std::move(d))
                            : backward_pass(g, ord, std::move(d));
          history.push_back(d);
        }
        for (std::size_t k = 1; k < history.size(); ++k)
          for (Vertex v = 0; v < n; ++v)
            if (history[k][v] > history[k - 1][v]) ++monotone_failures;

        for (int t = 0; t <= 3; ++t) {
          const SsspReport sweep = t_light_sssp(g, 0, t);
          const DistVector bound = t_light_oracle(g, 0, t);
          for (Vertex v = 0; v < n; ++v) {
            if (sweep.dist[v] > bound[v]) ++bound_failures;
            // The pass history must reproduce the packaged run exactly.
            if (sweep.dist[v] != history[static_cast<std::size_t>(1 + 2 * t)][v])
              ++bound_failures;
          }
        }
      }
  out.pass = bound_failures == 0 && monotone_failures == 0;
  out.detail = "200 instances, " + std::to_string(bound_failures) +
               " bound violations, " + std::to_string(monotone_failures) +
               " monotonicity violations";
  return out;
}

struct DagCorpusOutcome {
  Outcome equivalence;  // criterion 3
  Outcome accounting;   // criterion 6
};

// Criteria 3 and 6 share one 200-DAG corpus: every solver must agree with
// Floyd-Warshall, and the instrumented work must respect the leaf bounds.
DagCorpusOutcome criterion_dag_corpus() {
  DagCorpusOutcome out;
  std::ostringstream csv;
  csv << "n,p,seed,ok\n";
  int mismatches = 0;
  int accounting_failures = 0;
  for (Vertex n : {16, 32, 48, 64})
    for (double p : {0.2, 0.5})
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenConfig cfg;
        cfg.n = n;
        cfg.p = p;
        cfg.seed = seed;
        cfg.mode = GraphMode::dag;
        const Graph g = gen_instance(cfg);

        const FloydWarshallResult fw = floyd_warshall(g);
        const TopoOrder topo = topo_sort(g);
        const AncestorSets anc = ancestor_sets(g, topo);
        const LexApspResult lex = apsp_lex_first(g, topo, anc);

        const bool ok = !fw.negative_cycle && lex.dist == fw.dist &&
                        apsp_standard_dag(g, topo) == fw.dist &&
                        apsp_bidirectional(g).dist == fw.dist;
        if (!ok) ++mismatches;
        csv << n << ',' << format_probability(p) << ',' << seed << ','
            << (ok ? 1 : 0) << '\n';

        std::int64_t ancestor_total = 0;
        for (Vertex v = 0; v < n; ++v) ancestor_total += anc.count(v);
        const bool bounds_ok =
            lex.work.select_runs <= static_cast<std::uint64_t>(lex.stats.sum_indeg_leaf) &&
            lex.work.select_cost <= static_cast<std::uint64_t>(lex.stats.sum_indeg_leaf) &&
            lex.work.splice_steps <= static_cast<std::uint64_t>(n + ancestor_total);
        if (!bounds_ok) ++accounting_failures;
      }
  out.equivalence.pass = mismatches == 0;
  out.equivalence.detail =
      "200 DAGs, " + std::to_string(mismatches) + " solver disagreements";
  out.equivalence.csv = csv.str();
  out.accounting.pass = accounting_failures == 0;
  out.accounting.detail = "200 DAGs, " + std::to_string(accounting_failures) +
                          " accounting violations";
  return out;
}

// Criterion 4: trees equal the brute-force canonical paths on 100 small DAGs
// and every tree walk realizes its reported distance.
Outcome criterion_tree_property() {
  Outcome out;
  int failures = 0;
  for (double p : {0.2, 0.35, 0.5, 0.65})
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      GenConfig cfg;
      cfg.n = 8;
      cfg.p = p;
      cfg.seed = 7000 + seed;
      cfg.mode = GraphMode::dag;
      const Graph g = gen_instance(cfg);
      const TopoOrder topo = topo_sort(g);
      const AncestorSets anc = ancestor_sets(g, topo);
      const LexApspResult lex = apsp_lex_first(g, topo, anc, true);
      for (Vertex v = 0; v < 8; ++v) {
        const auto expected = lex_first_paths_bruteforce(g, topo, v);
        for (Vertex u = 0; u < 8; ++u) {
          if (u == v) continue;
          const auto path = extract_path(lex.trees, u, v);
          if (path != expected[u]) ++failures;
          if (path.empty()) {
            if (!lex.dist(u, v).is_infinite()) ++failures;
          } else if (path.back() != v || path_weight(g, path) != lex.dist(u, v)) {
            ++failures;
          }
        }
      }
    }
  out.pass = failures == 0;
  out.detail = "100 DAGs, " + std::to_string(failures) + " path mismatches";
  return out;
}

// Criterion 5: the complete DAG whose consecutive edges cost -1 and all
// others 100, at n = 5 and n = 50.
Outcome criterion_chain_dag() {
  Outcome out;
  int failures = 0;
  for (Vertex n : {5, 50}) {
    const Graph g = gen_chain_dominant_dag(n, 100);
    const LexApspResult lex = apsp_lex_first(g);
    if (lex.dist(0, n - 1) != ExtDist{-(n - 1)}) ++failures;
    for (Vertex v = 1; v < n; ++v)
      if (lex.stats.leaf_counts[v] != 1) ++failures;
    if (lex.stats.sum_indeg_leaf != g.edge_count()) ++failures;
  }
  out.pass = failures == 0;
  out.detail = "n in {5,50}, " + std::to_string(failures) + " deviations";
  return out;
}

// Criterion 7: sampling solver on 100 planted-cycle instances.
Outcome criterion_sampling() {
  Outcome out;
  std::ostringstream csv;
  csv << "seed,retries,ok\n";
  int failures = 0;
  int first_attempt = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_planted_cycles(40, 10, 3, 0.3, seed);
    const FloydWarshallResult fw = floyd_warshall(g);
    SampleConfig cfg;
    cfg.d = 10;
    cfg.c = 2.0;
    cfg.seed = seed;
    cfg.max_retries = 5;
    bool ok = false;
    int retries = -1;
    try {
      const CyclicApspResult r = apsp_large_cycles(g, cfg);
      retries = r.retries_used;
      ok = r.dist == fw.dist;
      if (r.retries_used == 0) ++first_attempt;
    } catch (const ResidualCyclic&) {
      ok = false;  // exhausting retries is itself a failure
    }
    if (!ok) ++failures;
    csv << seed << ',' << retries << ',' << (ok ? 1 : 0) << '\n';
  }
  out.pass = failures == 0 && first_attempt >= 80;
  out.detail = "100 instances, " + std::to_string(failures) + " failures, " +
               std::to_string(first_attempt) + " first-attempt successes";
  out.csv = csv.str();
  return out;
}

// Criterion 8: output-sensitive APSP core time at most half the baseline's
// on dense 1000-vertex DAGs.
Outcome criterion_timing_ratio() {
  Outcome out;
  GenConfig cfg;
  cfg.n = 1000;
  cfg.p = 0.8;
  cfg.seed = 1234;
  cfg.mode = GraphMode::dag;
  const std::vector<std::string> algos = {"baseline", "lex"};
  const auto records = run_timing_experiment(cfg, 20, algos);

  double baseline_ms = 0.0, lex_ms = 0.0, closure_ms = 0.0;
  for (const TimingRecord& r : records) {
    if (r.algorithm == "baseline") baseline_ms = r.mean_ms;
    if (r.algorithm == "lex") lex_ms = r.mean_ms;
    if (r.algorithm == "closure") closure_ms = r.mean_ms;
  }
  out.pass = lex_ms > 0.0 && baseline_ms >= 2.0 * lex_ms;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "baseline %.3f ms, core %.3f ms (closure %.3f ms), ratio %.2f",
                baseline_ms, lex_ms, closure_ms,
                lex_ms > 0.0 ? baseline_ms / lex_ms : 0.0);
  out.detail = buf;
  return out;
}

// Criterion 9: across p in {0.2,...,0.8}, the sweep schedule reaches full
// exactness in strictly fewer iterations than Bellman-Ford on average.
Outcome criterion_convergence_order() {
  Outcome out;
  std::vector<QualityRecord> all_records;
  std::ostringstream detail;
  bool pass = true;
  for (double p : {0.2, 0.4, 0.6, 0.8}) {
    double sweep_sum = 0.0, bf_sum = 0.0;
    int counted = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Graph g = gen_no_negative_cycles(100, p, 9000 + seed);
      GenConfig label;
      label.n = 100;
      label.p = p;
      label.seed = 9000 + seed;
      const auto records = run_quality_experiment(g, label, 0, 250, true);
      int sweep_first = 0, bf_first = 0;
      for (const QualityRecord& r : records) {
        if (!r.alg1_exact) break;  // uncertified instance; should not happen
        if (sweep_first == 0 && *r.alg1_exact == 100) sweep_first = r.iter;
        if (bf_first == 0 && *r.bf_exact == 100) bf_first = r.iter;
      }
      if (sweep_first == 0 || bf_first == 0) {
        pass = false;
        continue;
      }
      sweep_sum += sweep_first;
      bf_sum += bf_first;
      ++counted;
      all_records.insert(all_records.end(), records.begin(), records.end());
    }
    const double sweep_mean = counted ? sweep_sum / counted : 0.0;
    const double bf_mean = counted ? bf_sum / counted : 0.0;
    if (!(counted == 25 && sweep_mean < bf_mean)) pass = false;
    char buf[96];
    std::snprintf(buf, sizeof(buf), " p=%s: %.2f vs %.2f;",
                  format_probability(p).c_str(), sweep_mean, bf_mean);
    detail << buf;
  }
  std::ostringstream csv;
  write_quality_csv(csv, all_records);
  out.pass = pass;
  out.detail = "mean first-exact iterations (sweeps vs Bellman-Ford):" + detail.str();
  out.csv = csv.str();
  return out;
}

struct Gate {
  int number = 0;
  std::string name;
  double limit_s = 0.0;
  Outcome outcome;
  double elapsed_s = 0.0;
};

void write_artifact(const Gate& gate) {
  if (gate.outcome.csv.empty()) return;
  namespace fs = std::filesystem;
  fs::create_directories("acceptance_artifacts");
  std::ofstream out("acceptance_artifacts/criterion" + std::to_string(gate.number) +
                    ".csv");
  out << gate.outcome.csv;
}

}  // namespace

int main() {
  std::vector<Gate> gates;
  auto run = [&](int number, const std::string& name, double limit_s, auto&& fn) {
    Gate gate;
    gate.number = number;
    gate.name = name;
    gate.limit_s = limit_s;
    const auto t0 = Clock::now();
    try {
      gate.outcome = fn();
    } catch (const std::exception& e) {
      gate.outcome.pass = false;
      gate.outcome.detail = std::string("exception: ") + e.what();
    }
    gate.elapsed_s = seconds_since(t0);
    if (limit_s > 0.0 && gate.elapsed_s >= limit_s) {
      gate.outcome.pass = false;
      gate.outcome.detail += " [over time limit]";
    }
    gates.push_back(std::move(gate));
  };

  run(1, "single-source equivalence vs oracles", 10.0, criterion_sssp_equivalence);
  run(2, "sweep walk-budget bound and monotonicity", 20.0, criterion_sweep_bound);

  // The two DAG-corpus gates share one run; its time is accounted to gate 3.
  const auto corpus_t0 = Clock::now();
  DagCorpusOutcome dag1;
  try {
    dag1 = criterion_dag_corpus();
  } catch (const std::exception& e) {
    dag1.equivalence.detail = dag1.accounting.detail =
        std::string("exception: ") + e.what();
  }
  const double corpus_elapsed = seconds_since(corpus_t0);
  {
    Gate g3;
    g3.number = 3;
    g3.name = "all-pairs equivalence vs oracles";
    g3.limit_s = 20.0;
    g3.outcome = dag1.equivalence;
    g3.elapsed_s = corpus_elapsed;
    if (corpus_elapsed >= g3.limit_s) {
      g3.outcome.pass = false;
      g3.outcome.detail += " [over time limit]";
    }
    gates.push_back(g3);
  }

  run(4, "canonical-first tree property", 10.0, criterion_tree_property);
  run(5, "cheap-chain complete DAG values", 10.0, criterion_chain_dag);

  {
    Gate g6;
    g6.number = 6;
    g6.name = "work-counter accounting bounds";
    g6.outcome = dag1.accounting;
    gates.push_back(g6);
  }

  run(7, "sampling solver on planted cycles", 30.0, criterion_sampling);
  run(8, "timing ratio on dense 1000-vertex DAGs", 300.0, criterion_timing_ratio);
  run(9, "convergence-order comparison", 120.0, criterion_convergence_order);

  // Criterion 10: identical seeds reproduce byte-identical CSV artifacts.
  {
    Gate g10;
    g10.number = 10;
    g10.name = "reproducibility of CSV artifacts";
    const auto t0 = Clock::now();
    try {
      const bool same1 = criterion_sssp_equivalence().csv == gates[0].outcome.csv;
      const bool same3 = criterion_dag_corpus().equivalence.csv == gates[2].outcome.csv;
      const bool same7 = criterion_sampling().csv == gates[6].outcome.csv;
      const bool same9 = criterion_convergence_order().csv == gates[8].outcome.csv;
      g10.outcome.pass = same1 && same3 && same7 && same9;
      g10.outcome.detail = std::string("reruns identical: c1=") +
                           (same1 ? "yes" : "no") + " c3=" + (same3 ? "yes" : "no") +
                           " c7=" + (same7 ? "yes" : "no") + " c9=" +
                           (same9 ? "yes" : "no");
    } catch (const std::exception& e) {
      g10.outcome.pass = false;
      g10.outcome.detail = std::string("exception: ") + e.what();
    }
    g10.elapsed_s = seconds_since(t0);
    gates.push_back(g10);
  }

  bool all_pass = true;
  for (const Gate& gate : gates) {
    if (!gate.outcome.pass) all_pass = false;
    std::printf("%s  criterion %2d  %-45s  %6.1fs  %s\n",
                gate.outcome.pass ? "PASS" : "FAIL", gate.number,
                gate.name.c_str(), gate.elapsed_s, gate.outcome.detail.c_str());
    write_artifact(gate);
  }
  return all_pass ? 0 : 1;
}
