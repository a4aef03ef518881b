#include "dagsp/apsp_cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

#include "dagsp/apsp_dag.hpp"
#include "dagsp/error.hpp"
#include "dagsp/order.hpp"

namespace dagsp {

DistVector dijkstra(const Graph& g, Vertex source) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("Dijkstra source out of range");
  if (g.min_weight() < 0)
    throw NegativeWeight("Dijkstra requires nonnegative edge weights");

  DistVector dist(static_cast<std::size_t>(n), ExtDist::infinity());
  dist[source] = ExtDist::zero();

  // (distance, vertex) min-heap; pair ordering breaks distance ties toward
  // the smaller vertex id.
  using Entry = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.push({0, source});

  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (dist[u].is_infinite() || du != dist[u].value()) continue;  // stale entry
    for (const Arc& a : g.out(u)) {
      const ExtDist cand = ExtDist(du) + a.weight;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        heap.push({cand.value(), a.to});
      }
    }
  }
  return dist;
}

namespace {

void validate_sample_config(Vertex n, const SampleConfig& cfg) {
  if (n < 1) throw GraphError("sampling needs at least one vertex");
  if (cfg.d < 1 || cfg.d > n)
    throw GraphError("assumed cycle length must be within [1, n]");
  if (!(cfg.c > 0.0)) throw GraphError("oversampling constant must be positive");
  if (cfg.max_retries < 0) throw GraphError("retry budget must be nonnegative");
}

std::vector<Vertex> draw_sample(std::mt19937_64& rng, Vertex n, Vertex size) {
  // Partial Fisher-Yates over the identity permutation, then sort so the
  // returned set has a canonical (ascending) representation.
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  for (Vertex i = 0; i < size; ++i) {
    std::uniform_int_distribution<Vertex> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

Vertex sample_size(Vertex n, const SampleConfig& cfg) {
  validate_sample_config(n, cfg);
  if (n == 1) return 1;
  const double raw = cfg.c * static_cast<double>(n) * std::log(static_cast<double>(n)) /
                     static_cast<double>(cfg.d);
  const auto size = static_cast<Vertex>(std::ceil(raw));
  return std::min(n, std::max<Vertex>(size, 1));
}

std::vector<Vertex> sample_vertices(Vertex n, const SampleConfig& cfg) {
  const Vertex size = sample_size(n, cfg);
  std::mt19937_64 rng(cfg.seed);
  return draw_sample(rng, n, size);
}

CyclicApspResult apsp_large_cycles(const Graph& g, const SampleConfig& cfg) {
  const Vertex n = g.vertex_count();
  validate_sample_config(n, cfg);
  if (g.min_weight() < 0)
    throw NegativeWeight("large-cycle APSP requires nonnegative edge weights");

  const Vertex size = sample_size(n, cfg);
  std::mt19937_64 rng(cfg.seed);

  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    const std::vector<Vertex> sample = draw_sample(rng, n, size);

    // Induced subgraph on the unsampled vertices, compacted to 0..n_sub-1.
    std::vector<char> sampled(static_cast<std::size_t>(n), 0);
    for (Vertex s : sample) sampled[s] = 1;
    std::vector<Vertex> sub_id(static_cast<std::size_t>(n), kNoVertex);
    std::vector<Vertex> orig_id;
    for (Vertex v = 0; v < n; ++v) {
      if (sampled[v]) continue;
      sub_id[v] = static_cast<Vertex>(orig_id.size());
      orig_id.push_back(v);
    }
    std::vector<Edge> sub_edges;
    for (const Edge& e : g.edges())
      if (!sampled[e.tail] && !sampled[e.head])
        sub_edges.push_back({sub_id[e.tail], sub_id[e.head], e.weight});

    const Graph residual = build_graph(static_cast<Vertex>(orig_id.size()), sub_edges);
    LexApspResult sub;
    try {
      sub = apsp_lex_first(residual);
    } catch (const CycleDetected&) {
      continue;  // the sample missed a cycle; draw again
    }

    DistMatrix dist = DistMatrix::with_zero_diagonal(n);
    for (Vertex us = 0; us < residual.vertex_count(); ++us) {
      const Vertex u = orig_id[us];
      auto row = dist.row(u);
      const auto sub_row = sub.dist.row(us);
      for (Vertex vs = 0; vs < residual.vertex_count(); ++vs) {
        const ExtDist d = sub_row[vs];
        if (d < row[orig_id[vs]]) row[orig_id[vs]] = d;
      }
    }

    const Graph rev = reverse_graph(g);
    for (Vertex s : sample) {
      const DistVector from_s = dijkstra(g, s);
      auto row_s = dist.row(s);
      for (Vertex v = 0; v < n; ++v)
        if (from_s[v] < row_s[v]) row_s[v] = from_s[v];
      const DistVector to_s = dijkstra(rev, s);
      for (Vertex v = 0; v < n; ++v)
        if (to_s[v] < dist(v, s)) dist(v, s) = to_s[v];
    }

    // Stitch: any shortest path touching the sample decomposes at a sampled
    // vertex s into two Dijkstra-exact halves.
    for (Vertex s : sample) {
      const auto row_s = dist.row(s);
      for (Vertex u = 0; u < n; ++u) {
        const ExtDist dus = dist(u, s);
        if (dus.is_infinite()) continue;
        auto row_u = dist.row(u);
        for (Vertex v = 0; v < n; ++v) {
          const ExtDist cand = dus + row_s[v];
          if (cand < row_u[v]) row_u[v] = cand;
        }
      }
    }

    return {std::move(dist), sample, attempt};
  }

  throw ResidualCyclic("every sampling attempt left a cyclic residual graph");
}

}  // namespace dagsp
