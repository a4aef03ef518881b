#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "dagsp/bench.hpp"
#include "dagsp/error.hpp"
#include "dagsp/graph.hpp"

using namespace dagsp;

namespace {

GenConfig make_cfg(Vertex n, double p, std::uint64_t seed, GraphMode mode) {
  GenConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.seed = seed;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("instance generation hits the degenerate probabilities") {
  CHECK(gen_instance(make_cfg(10, 0.0, 1, GraphMode::digraph)).edge_count() == 0);
  CHECK(gen_instance(make_cfg(4, 1.0, 1, GraphMode::dag)).edge_count() == 6);
  CHECK(gen_instance(make_cfg(4, 1.0, 1, GraphMode::digraph)).edge_count() == 12);
}

TEST_CASE("instance generation validates its config") {
  CHECK_THROWS_AS(gen_instance(make_cfg(-1, 0.5, 0, GraphMode::dag)), GraphError);
  CHECK_THROWS_AS(gen_instance(make_cfg(5, -0.1, 0, GraphMode::dag)), GraphError);
  CHECK_THROWS_AS(gen_instance(make_cfg(5, 1.5, 0, GraphMode::dag)), GraphError);
  GenConfig cfg = make_cfg(5, 0.5, 0, GraphMode::dag);
  cfg.weight_lo = 10;
  cfg.weight_hi = 5;
  CHECK_THROWS_AS(gen_instance(cfg), GraphError);
}

TEST_CASE("instance generation is reproducible and respects bounds") {
  GenConfig cfg = make_cfg(30, 0.3, 77, GraphMode::digraph);
  cfg.weight_lo = -9;
  cfg.weight_hi = 9;
  const Graph a = gen_instance(cfg);
  const Graph b = gen_instance(cfg);
  CHECK(a.edges() == b.edges());
  for (const Edge& e : a.edges()) {
    CHECK(e.weight >= -9);
    CHECK(e.weight <= 9);
  }
  cfg.seed = 78;
  CHECK(gen_instance(cfg).edges() != a.edges());
}

TEST_CASE("dag-mode edges only point forward and match binomial statistics") {
  const GenConfig cfg = make_cfg(100, 0.4, 5, GraphMode::dag);
  const Graph g = gen_instance(cfg);
  for (const Edge& e : g.edges()) CHECK(e.tail < e.head);
  // 4950 pairs at p=0.4: mean 1980, sigma = sqrt(4950*0.4*0.6) ~ 34.5.
  CHECK(g.edge_count() > 1980 - 4 * 35);
  CHECK(g.edge_count() < 1980 + 4 * 35);
}

TEST_CASE("quality lockstep on the detour instance, frozen by hand") {
  // 0 -> 1 (10), 0 -> 2 (1), 2 -> 1 (1).  After one iteration both sides
  // hold D = [0, 10, 1]: the first forward sweep cannot use 2 -> 1 because
  // vertex 2 sits after vertex 1 in the breadth-first order, and the first
  // Bellman-Ford round only reaches one-edge walks.  The second iteration
  // (backward sweep / second round) pulls D(1) down to 2 on both sides.
  const Graph g =
      build_graph(3, std::vector<Edge>{{0, 1, 10}, {0, 2, 1}, {2, 1, 1}});
  const GenConfig label = make_cfg(3, 0.5, 0, GraphMode::digraph);
  const auto records = run_quality_experiment(g, label, 0, 2);
  REQUIRE(records.size() == 2);

  CHECK(records[0].iter == 1);
  CHECK(records[0].alg1_sharper == 0);
  CHECK(records[0].bf_sharper == 0);
  CHECK(records[0].equal == 3);
  REQUIRE(records[0].alg1_exact.has_value());
  CHECK(*records[0].alg1_exact == 2);
  CHECK(*records[0].bf_exact == 2);

  CHECK(records[1].iter == 2);
  CHECK(records[1].alg1_sharper == 0);
  CHECK(records[1].bf_sharper == 0);
  CHECK(records[1].equal == 3);
  CHECK(*records[1].alg1_exact == 3);
  CHECK(*records[1].bf_exact == 3);
}

TEST_CASE("quality records on an edgeless instance are all equal") {
  const auto records =
      run_quality_experiment(make_cfg(5, 0.0, 0, GraphMode::digraph), 0, 3);
  REQUIRE(records.size() == 3);
  for (const auto& r : records) {
    CHECK(r.equal == 5);
    CHECK(r.alg1_sharper == 0);
    CHECK(r.bf_sharper == 0);
    CHECK(*r.alg1_exact == 5);
  }
}

TEST_CASE("quality sharper counts partition the vertex set") {
  const GenConfig cfg = make_cfg(40, 0.3, 11, GraphMode::digraph);
  const auto records = run_quality_experiment(cfg, 0, 10);
  REQUIRE(records.size() == 10);
  for (const auto& r : records) CHECK(r.alg1_sharper + r.bf_sharper + r.equal == 40);
  CHECK_THROWS_AS(run_quality_experiment(cfg, 0, 0), std::invalid_argument);
}

TEST_CASE("early stop ends at the first doubly-exact iteration") {
  GenConfig cfg = make_cfg(20, 0.4, 3, GraphMode::digraph);
  cfg.weight_lo = 0;  // nonnegative weights certify trivially
  cfg.weight_hi = 20;
  const auto records = run_quality_experiment(cfg, 0, 200, true);
  REQUIRE_FALSE(records.empty());
  const auto& last = records.back();
  CHECK(*last.alg1_exact == 20);
  CHECK(*last.bf_exact == 20);
  for (std::size_t i = 0; i + 1 < records.size(); ++i)
    CHECK((*records[i].alg1_exact < 20 || *records[i].bf_exact < 20));
}

TEST_CASE("quality CSV output is byte-stable") {
  const GenConfig cfg = make_cfg(12, 0.25, 9, GraphMode::digraph);
  std::ostringstream a, b;
  write_quality_csv(a, run_quality_experiment(cfg, 0, 4));
  write_quality_csv(b, run_quality_experiment(cfg, 0, 4));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,p,seed,iter,alg1_sharper,bf_sharper,equal,alg1_exact,bf_exact\n",
                      0) == 0);
  CHECK(a.str().find("12,0.25,9,1,") != std::string::npos);
}

TEST_CASE("uncertified instances leave the exact columns as NA") {
  // Force a negative cycle: two vertices, both arcs strongly negative.
  const Graph g = build_graph(2, std::vector<Edge>{{0, 1, -5}, {1, 0, -5}});
  const auto records =
      run_quality_experiment(g, make_cfg(2, 1.0, 0, GraphMode::digraph), 0, 1);
  REQUIRE(records.size() == 1);
  CHECK_FALSE(records[0].alg1_exact.has_value());
  std::ostringstream out;
  write_quality_csv(out, records);
  CHECK(out.str().find("NA,NA") != std::string::npos);
}

TEST_CASE("timing runs produce one record per algorithm plus closure") {
  GenConfig cfg = make_cfg(40, 0.5, 2, GraphMode::dag);
  cfg.weight_lo = 0;  // the sampling solver requires nonnegative weights
  cfg.weight_hi = 100;
  const std::vector<std::string> algos = {"baseline", "lex", "bidir", "cyclic"};
  const auto records = run_timing_experiment(cfg, 2, algos);
  REQUIRE(records.size() == 5);  // four algorithms + closure
  CHECK(records[0].algorithm == "baseline");
  CHECK(records[4].algorithm == "closure");
  for (const auto& r : records) {
    CHECK(r.trials == 2);
    CHECK(r.mean_ms >= 0.0);
    CHECK(r.stddev_ms >= 0.0);
  }

  std::ostringstream out;
  write_timing_csv(out, records);
  CHECK(out.str().rfind("n,p,algorithm,trials,mean_ms,stddev_ms\n", 0) == 0);
}

TEST_CASE("timing rejects bad requests") {
  const GenConfig dag_cfg = make_cfg(10, 0.5, 0, GraphMode::dag);
  const std::vector<std::string> bogus = {"quantum"};
  CHECK_THROWS_AS(run_timing_experiment(dag_cfg, 1, bogus), std::invalid_argument);
  const std::vector<std::string> ok = {"baseline"};
  CHECK_THROWS_AS(run_timing_experiment(dag_cfg, 0, ok), std::invalid_argument);
  const GenConfig digraph_cfg = make_cfg(10, 0.5, 0, GraphMode::digraph);
  CHECK_THROWS_AS(run_timing_experiment(digraph_cfg, 1, ok), std::invalid_argument);
}

TEST_CASE("config echo renders as JSON with merged extras") {
  std::ostringstream out;
  write_config_json(out, make_cfg(7, 0.125, 42, GraphMode::dag),
                    "{\"experiment\":\"demo\"}");
  const std::string s = out.str();
  CHECK(s.find("\"n\": 7") != std::string::npos);
  CHECK(s.find("\"p\": 0.125") != std::string::npos);
  CHECK(s.find("\"mode\": \"dag\"") != std::string::npos);
  CHECK(s.find("\"experiment\": \"demo\"") != std::string::npos);
}

TEST_CASE("probability formatting is minimal") {
  CHECK(format_probability(0.2) == "0.2");
  CHECK(format_probability(1.0) == "1");
  CHECK(format_probability(0.05) == "0.05");
}
