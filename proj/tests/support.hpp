// Shared helpers for the test binaries: instance builders with known
// structure and small independent oracles used to cross-check the library.
#pragma once

#include <algorithm>
#include <queue>
#include <random>
#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/types.hpp"

namespace dagsp::testing {

// Random digraph that is guaranteed free of negative cycles: each weight is
// phi(head) - phi(tail) + slack with slack >= 0, so every cycle's weight is
// the sum of its slacks. Potentials in [-400, 400] and slack in [0, 200]
// keep all weights inside [-800, 1000].
inline Graph gen_no_negative_cycles(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> phi_dist(-400, 400);
  std::uniform_int_distribution<Weight> slack_dist(0, 200);
  std::bernoulli_distribution keep(p);

  std::vector<Weight> phi(static_cast<std::size_t>(n));
  for (auto& x : phi) x = phi_dist(rng);

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!keep(rng)) continue;
      edges.push_back({u, v, phi[v] - phi[u] + slack_dist(rng)});
    }
  return build_graph(n, edges);
}

// Digraph whose every cycle has exactly `block` vertices: vertices are split
// into consecutive blocks, each block carries one directed chain plus the
// closing back edge and nothing else internally, and all remaining edges go
// from lower blocks to higher blocks (acyclic across blocks).
inline Graph gen_planted_cycles(Vertex n, Vertex block, int cycles, double p,
                                std::uint64_t seed, Weight lo = 0,
                                Weight hi = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> w(lo, hi);
  std::bernoulli_distribution keep(p);

  std::vector<Edge> edges;
  for (int b = 0; b < cycles; ++b) {
    const Vertex base = static_cast<Vertex>(b) * block;
    for (Vertex i = 0; i < block - 1; ++i)
      edges.push_back({base + i, base + i + 1, w(rng)});
    edges.push_back({base + block - 1, base, w(rng)});
  }
  const Vertex cycle_end = static_cast<Vertex>(cycles) * block;
  auto block_of = [&](Vertex v) {
    return v < cycle_end ? v / block : cycles + (v - cycle_end);
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (block_of(u) >= block_of(v)) continue;
      if (!keep(rng)) continue;
      edges.push_back({u, v, w(rng)});
    }
  return build_graph(n, edges);
}

// Complete DAG on n vertices (edges i -> j for all i < j) where consecutive
// edges cost -1 and all skip edges cost `expensive`. Shortest i -> j path is
// the full chain through every intermediate vertex, of weight -(j - i).
inline Graph gen_chain_dominant_dag(Vertex n, Weight expensive = 100) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      edges.push_back({i, j, j == i + 1 ? Weight{-1} : expensive});
  return build_graph(n, edges);
}

// Minimum number of edges on any walk from source, by plain BFS; -1 when
// unreachable. Independent of the library's ordering code.
inline std::vector<int> bfs_hops(const Graph& g, Vertex source) {
  std::vector<int> hops(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> q;
  hops[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (const Arc& a : g.out(u))
      if (hops[a.to] < 0) {
        hops[a.to] = hops[u] + 1;
        q.push(a.to);
      }
  }
  return hops;
}

// Vertices that can reach v, found by DFS over incoming arcs; excludes v.
inline std::vector<Vertex> reverse_reachable(const Graph& g, Vertex v) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
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
  std::vector<Vertex> result;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (seen[u] && u != v) result.push_back(u);
  return result;
}

}  // namespace dagsp::testing
