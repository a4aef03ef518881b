#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

enum class GraphMode { digraph, dag };

// G(n, p) instance description.  Pairs are visited in lexicographic order
// (dag mode: i < j directed i -> j; digraph mode: all ordered pairs) with one
// Bernoulli(p) draw each, and the weight of an accepted edge is drawn
// immediately afterwards, so the whole instance is a pure function of the
// config.  PRNG is std::mt19937_64 throughout.
struct GenConfig {
  Vertex n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  Weight weight_lo = -1000;
  Weight weight_hi = 1000;
  GraphMode mode = GraphMode::digraph;
};

Graph gen_instance(const GenConfig& cfg);

// Per-iteration comparison of the bounded-sweep estimates against
// Bellman-Ford rounds on the same instance.  Exact counts are present only
// when Floyd-Warshall certified the instance free of negative cycles.
struct QualityRecord {
  Vertex n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int iter = 0;
  Vertex alg1_sharper = 0;  // strictly smaller estimates than Bellman-Ford
  Vertex bf_sharper = 0;
  Vertex equal = 0;
  std::optional<Vertex> alg1_exact;  // vertices already at the true distance
  std::optional<Vertex> bf_exact;
};

// Runs both iteration schedules in lockstep for iterations 1..max_iter.
// Iteration 1 is the initial forward sweep; each later iteration is one more
// alternating sweep (backward, forward, ...) against one more Bellman-Ford
// round.  A round relaxes every edge against the previous round's values, so
// after k rounds the Bellman-Ford side holds the best distance over walks
// with at most k edges, independent of edge order.  With
// stop_when_both_exact, stops early once both sides are certified exact
// everywhere.
std::vector<QualityRecord> run_quality_experiment(const GenConfig& cfg, Vertex source,
                                                  int max_iter,
                                                  bool stop_when_both_exact = false);

// Same lockstep on a caller-supplied instance; `label` only fills the record
// columns (n, p, seed) and need not describe how g was produced.
std::vector<QualityRecord> run_quality_experiment(const Graph& g,
                                                  const GenConfig& label,
                                                  Vertex source, int max_iter,
                                                  bool stop_when_both_exact = false);

struct TimingRecord {
  Vertex n = 0;
  double p = 0.0;
  std::string algorithm;
  int trials = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
};

// Times APSP algorithms on `trials` DAG instances with seeds cfg.seed,
// cfg.seed+1, ...  Algorithm names: "baseline", "lex", "bidir", "cyclic".
// Ancestor-set construction for lex/bidir is excluded from their core time
// and reported as a separate "closure" record.  Every timed result is checked
// for equality against the baseline sweep before being recorded.
std::vector<TimingRecord> run_timing_experiment(const GenConfig& cfg, int trials,
                                                std::span<const std::string> algorithms);

// CSV emission.  Headers:
//   quality: n,p,seed,iter,alg1_sharper,bf_sharper,equal,alg1_exact,bf_exact
//   timing:  n,p,algorithm,trials,mean_ms,stddev_ms
// Missing exact counts print as NA.  Formatting is locale-independent so
// equal inputs serialize byte-identically.
void write_quality_csv(std::ostream& out, std::span<const QualityRecord> records);
void write_timing_csv(std::ostream& out, std::span<const TimingRecord> records);

// JSON description of the generating config, written beside every CSV.
// extra_json, when nonempty, must be a JSON object whose fields are merged in.
void write_config_json(std::ostream& out, const GenConfig& cfg,
                       const std::string& extra_json = "");

std::string format_probability(double p);

}  // namespace dagsp
