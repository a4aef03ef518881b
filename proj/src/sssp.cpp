#include "dagsp/sssp.hpp"

#include <algorithm>

#include "dagsp/error.hpp"

namespace dagsp {

DistVector forward_pass(const Graph& g, const BfsOrder& ord, DistVector d,
                        ParentTrace* trace) {
  const Vertex n = g.vertex_count();
  for (Vertex j = 1; j < n; ++j) {
    const Vertex v = ord.order[j];
    ExtDist dv = d[v];
    for (const Arc& a : g.in(v)) {
      if (ord.position[a.to] >= j) continue;  // backward edge, other sweep's job
      const ExtDist du = d[a.to];
      if (du.is_infinite()) continue;
      const ExtDist cand = du + a.weight;
      if (cand < dv) {
        dv = cand;
        if (trace) {
          trace->parent[v] = a.to;
          trace->via_weight[v] = a.weight;
        }
      }
    }
    d[v] = dv;
  }
  return d;
}

DistVector backward_pass(const Graph& g, const BfsOrder& ord, DistVector d,
                         ParentTrace* trace) {
  const Vertex n = g.vertex_count();
  for (Vertex j = n - 2; j >= 0; --j) {
    const Vertex v = ord.order[j];
    ExtDist dv = d[v];
    for (const Arc& a : g.in(v)) {
      if (ord.position[a.to] <= j) continue;
      const ExtDist du = d[a.to];
      if (du.is_infinite()) continue;
      const ExtDist cand = du + a.weight;
      if (cand < dv) {
        dv = cand;
        if (trace) {
          trace->parent[v] = a.to;
          trace->via_weight[v] = a.weight;
        }
      }
    }
    d[v] = dv;
  }
  return d;
}

SsspReport t_light_sssp(const Graph& g, Vertex source, int t, bool track_parents) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("SSSP source out of range");
  if (t < 0) throw GraphError("iteration bound must be nonnegative");

  const BfsOrder ord = bfs_order(g, source);

  SsspReport report;
  report.iterations_run = t;
  report.dist.assign(static_cast<std::size_t>(n), ExtDist::infinity());
  report.dist[source] = ExtDist::zero();
  if (track_parents) report.trace = ParentTrace::make(n);
  ParentTrace* trace = track_parents ? &report.trace : nullptr;

  report.dist = forward_pass(g, ord, std::move(report.dist), trace);
  for (int round = 0; round < t; ++round) {
    report.dist = backward_pass(g, ord, std::move(report.dist), trace);
    report.dist = forward_pass(g, ord, std::move(report.dist), trace);
  }

  if (t >= n - 2) report.negative_cycle = detect_negative_cycle(g, ord, report.dist);
  return report;
}

bool bellman_ford_scan(const Graph& g, DistVector& d, ParentTrace* trace) {
  const Vertex n = g.vertex_count();
  bool changed = false;
  for (Vertex u = 0; u < n; ++u) {
    const ExtDist du = d[u];  // no self-loops, so fixed across u's own arcs
    if (du.is_infinite()) continue;
    for (const Arc& a : g.out(u)) {
      const ExtDist cand = du + a.weight;
      if (cand < d[a.to]) {
        d[a.to] = cand;
        changed = true;
        if (trace) {
          trace->parent[a.to] = u;
          trace->via_weight[a.to] = a.weight;
        }
      }
    }
  }
  return changed;
}

SsspReport bellman_ford(const Graph& g, Vertex source, bool track_parents) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("SSSP source out of range");

  SsspReport report;
  report.dist.assign(static_cast<std::size_t>(n), ExtDist::infinity());
  report.dist[source] = ExtDist::zero();
  if (track_parents) report.trace = ParentTrace::make(n);
  ParentTrace* trace = track_parents ? &report.trace : nullptr;

  bool fixpoint = false;
  for (Vertex k = 0; k < n - 1; ++k) {
    ++report.iterations_run;
    if (!bellman_ford_scan(g, report.dist, trace)) {
      fixpoint = true;
      break;
    }
  }
  report.negative_cycle = !fixpoint && bellman_ford_scan(g, report.dist, trace);
  return report;
}

bool detect_negative_cycle(const Graph& g, const BfsOrder& ord, const DistVector& d) {
  DistVector probe = backward_pass(g, ord, d);
  probe = forward_pass(g, ord, std::move(probe));
  for (std::size_t v = 0; v < d.size(); ++v)
    if (probe[v] < d[v]) return true;
  return false;
}

}  // namespace dagsp
