#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// Binary-heap Dijkstra; requires every edge weight nonnegative (throws
// NegativeWeight otherwise).  Heap ties break by ascending vertex id.
DistVector dijkstra(const Graph& g, Vertex source);

struct SampleConfig {
  Vertex d = 1;            // assumed minimum directed cycle length, 1 <= d <= n
  double c = 2.0;          // oversampling constant, > 0
  std::uint64_t seed = 0;  // PRNG seed (std::mt19937_64)
  int max_retries = 5;     // extra sampling attempts after the first
};

// min(n, ceil(c * n * ln(n) / d)), with n = 1 treated as 1.
Vertex sample_size(Vertex n, const SampleConfig& cfg);

// Uniform sample of sample_size(n, cfg) distinct vertices, ascending.  Equal
// seeds produce equal sets; this draw is exactly the first attempt made by
// apsp_large_cycles with the same config.
std::vector<Vertex> sample_vertices(Vertex n, const SampleConfig& cfg);

struct CyclicApspResult {
  DistMatrix dist;
  std::vector<Vertex> sample;  // the sample that produced the accepted run
  int retries_used = 0;        // 0 = first attempt succeeded
};

// All-pairs shortest paths for nonnegative-weight digraphs whose directed
// cycles all have at least d vertices.  A random sample S hits every long
// cycle with high probability, so the graph induced on V minus S is (almost
// always) acyclic and solved by the output-sensitive DAG sweep; Dijkstra runs
// from and to each sampled vertex, and paths through S are stitched by a
// min-combine over all pairs.  A cyclic residual triggers a fresh sample from
// the same PRNG stream, up to max_retries extra attempts; exhaustion throws
// ResidualCyclic, so any returned matrix is exact.
CyclicApspResult apsp_large_cycles(const Graph& g, const SampleConfig& cfg);

}  // namespace dagsp
