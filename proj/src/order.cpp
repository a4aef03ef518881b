#include "dagsp/order.hpp"

#include <functional>
#include <queue>

#include "dagsp/error.hpp"

namespace dagsp {

BfsOrder bfs_order(const Graph& g, Vertex source) {
  const Vertex n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("BFS source out of range");

  BfsOrder ord;
  ord.level.assign(static_cast<std::size_t>(n), BfsOrder::kUnreachable);
  ord.level[source] = 0;

  std::queue<Vertex> frontier;
  frontier.push(source);
  Vertex max_level = 0;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (const Arc& a : g.out(u)) {
      if (ord.level[a.to] != BfsOrder::kUnreachable) continue;
      ord.level[a.to] = ord.level[u] + 1;
      max_level = std::max(max_level, ord.level[a.to]);
      frontier.push(a.to);
    }
  }

  // Bucket by level; scanning ids in ascending order makes each bucket, and
  // the trailing unreachable block, ascend by id.
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(max_level) + 1);
  std::vector<Vertex> unreachable;
  for (Vertex v = 0; v < n; ++v) {
    if (ord.level[v] == BfsOrder::kUnreachable)
      unreachable.push_back(v);
    else
      buckets[ord.level[v]].push_back(v);
  }
  ord.order.reserve(static_cast<std::size_t>(n));
  for (const auto& bucket : buckets)
    ord.order.insert(ord.order.end(), bucket.begin(), bucket.end());
  ord.order.insert(ord.order.end(), unreachable.begin(), unreachable.end());

  ord.position.assign(static_cast<std::size_t>(n), 0);
  for (Vertex i = 0; i < n; ++i) ord.position[ord.order[i]] = i;
  return ord;
}

TopoOrder topo_sort(const Graph& g) {
  const Vertex n = g.vertex_count();

  std::vector<std::int64_t> indeg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);

  TopoOrder topo;
  topo.order.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) topo.order.push_back(v);
  topo.source_count = static_cast<Vertex>(topo.order.size());

  // Emit all original sources first (no edge enters them, so any prefix
  // ordering of them is valid), then run Kahn's algorithm with a min-id
  // priority ready set over the remainder.
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex i = 0; i < topo.source_count; ++i)
    for (const Arc& a : g.out(topo.order[i]))
      if (--indeg[a.to] == 0) ready.push(a.to);

  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    topo.order.push_back(v);
    for (const Arc& a : g.out(v))
      if (--indeg[a.to] == 0) ready.push(a.to);
  }

  if (static_cast<Vertex>(topo.order.size()) != n)
    throw CycleDetected("graph contains a directed cycle");

  topo.position.assign(static_cast<std::size_t>(n), 0);
  for (Vertex i = 0; i < n; ++i) topo.position[topo.order[i]] = i;
  return topo;
}

}  // namespace dagsp
