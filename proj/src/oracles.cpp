#include "dagsp/oracles.hpp"

#include <algorithm>

#include "dagsp/error.hpp"

namespace dagsp {

FloydWarshallResult floyd_warshall(const Graph& g) {
  const Vertex n = g.vertex_count();
  DistMatrix d = DistMatrix::with_zero_diagonal(n);
  for (const Edge& e : g.edges()) {
    const ExtDist w{e.weight};
    if (w < d(e.tail, e.head)) d(e.tail, e.head) = w;  // parallel edges: keep min
  }

  for (Vertex k = 0; k < n; ++k) {
    const auto row_k = d.row(k);
    for (Vertex i = 0; i < n; ++i) {
      const ExtDist dik = d(i, k);
      if (dik.is_infinite()) continue;
      auto row_i = d.row(i);
      for (Vertex j = 0; j < n; ++j) {
        const ExtDist cand = dik + row_k[j];
        if (cand < row_i[j]) row_i[j] = cand;
      }
    }
  }

  bool negative_cycle = false;
  for (Vertex v = 0; v < n; ++v)
    if (d(v, v) < ExtDist::zero()) negative_cycle = true;
  return {std::move(d), negative_cycle};
}

LayeredDistTable::LayeredDistTable(const Graph& g, Vertex source, int max_edges) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("oracle source out of range");
  if (max_edges < 0) throw GraphError("edge budget must be nonnegative");

  n_ = static_cast<std::size_t>(n);
  max_edges_ = max_edges;
  rows_.assign(n_ * static_cast<std::size_t>(max_edges + 1), ExtDist::infinity());
  rows_[source] = ExtDist::zero();

  for (int k = 1; k <= max_edges; ++k) {
    const ExtDist* prev = rows_.data() + static_cast<std::size_t>(k - 1) * n_;
    ExtDist* cur = rows_.data() + static_cast<std::size_t>(k) * n_;
    for (Vertex v = 0; v < n; ++v) {
      ExtDist best = prev[v];
      for (const Arc& a : g.in(v)) {
        const ExtDist via = prev[a.to] + a.weight;
        if (via < best) best = via;
      }
      cur[v] = best;
    }
  }
}

DistVector t_light_oracle(const Graph& g, Vertex source, int t) {
  const Vertex n = g.vertex_count();
  if (t < 0) throw GraphError("slack must be nonnegative");

  // Minimum edge counts from the source, by plain uniform-cost relaxation.
  std::vector<int> hops(static_cast<std::size_t>(n), -1);
  if (source < 0 || source >= n) throw GraphError("oracle source out of range");
  hops[source] = 0;
  for (Vertex round = 0; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (hops[e.tail] < 0) continue;
      if (hops[e.head] < 0 || hops[e.head] > hops[e.tail] + 1) {
        hops[e.head] = hops[e.tail] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }

  int budget = 0;
  for (Vertex v = 0; v < n; ++v)
    if (hops[v] >= 0) budget = std::max(budget, hops[v] + t);
  const LayeredDistTable table(g, source, budget);

  DistVector result(static_cast<std::size_t>(n), ExtDist::infinity());
  for (Vertex v = 0; v < n; ++v) {
    if (hops[v] < 0) continue;
    ExtDist best = ExtDist::infinity();
    for (int k = 0; k <= hops[v] + t; ++k)
      best = std::min(best, table.at(v, k));
    result[v] = best;
  }
  return result;
}

namespace {

struct PathSearch {
  const Graph& g;
  const TopoOrder& topo;
  std::vector<Weight> weight_so_far{0};
  std::vector<Vertex> rev_path;          // starts at the target, walks tails
  std::vector<Vertex> rev_encoding;      // topological positions of rev_path
  std::vector<ExtDist> best_len;
  std::vector<std::vector<Vertex>> best_rev_encoding;
  std::vector<std::vector<Vertex>> best_rev_path;

  void visit() {
    const Vertex u = rev_path.back();
    const ExtDist len{weight_so_far.back()};
    bool better = false;
    if (len < best_len[u]) {
      better = true;
    } else if (len == best_len[u]) {
      better = std::lexicographical_compare(rev_encoding.begin(), rev_encoding.end(),
                                            best_rev_encoding[u].begin(),
                                            best_rev_encoding[u].end());
    }
    if (better) {
      best_len[u] = len;
      best_rev_encoding[u] = rev_encoding;
      best_rev_path[u] = rev_path;
    }
    for (const Arc& a : g.in(u)) {
      rev_path.push_back(a.to);
      rev_encoding.push_back(topo.position[a.to]);
      weight_so_far.push_back(weight_so_far.back() + a.weight);
      visit();
      rev_path.pop_back();
      rev_encoding.pop_back();
      weight_so_far.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<Vertex>> lex_first_paths_bruteforce(const Graph& g,
                                                            const TopoOrder& topo,
                                                            Vertex v) {
  const Vertex n = g.vertex_count();
  if (n > 12) throw SizeLimit("path enumeration is capped at 12 vertices");
  if (v < 0 || v >= n) throw GraphError("target out of range");

  PathSearch search{g,
                    topo,
                    {0},
                    {v},
                    {topo.position[v]},
                    DistVector(static_cast<std::size_t>(n), ExtDist::infinity()),
                    std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n)),
                    std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n))};
  search.visit();

  std::vector<std::vector<Vertex>> paths(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    if (u == v || search.best_rev_path[u].empty()) continue;
    paths[u].assign(search.best_rev_path[u].rbegin(), search.best_rev_path[u].rend());
  }
  return paths;
}

}  // namespace dagsp
