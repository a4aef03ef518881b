#pragma once

#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// A linear order extending the BFS partial order from a source: levels are
// non-decreasing along the order and the source sits first.  Ties within a
// level break by ascending vertex id; unreachable vertices (level -1) are
// appended in ascending id.
struct BfsOrder {
  static constexpr Vertex kUnreachable = -1;

  std::vector<Vertex> order;     // position -> vertex
  std::vector<Vertex> position;  // vertex -> position
  std::vector<Vertex> level;     // vertex -> BFS level, -1 if unreachable

  // An edge is forward when its tail precedes its head in the linear order.
  bool is_forward(Vertex tail, Vertex head) const {
    return position[tail] < position[head];
  }
};

BfsOrder bfs_order(const Graph& g, Vertex source);

// Topological numbering with every indegree-0 vertex placed first (ascending
// id), then Kahn's algorithm with a min-id ready set over the rest.  Throws
// CycleDetected when the graph is not acyclic.
struct TopoOrder {
  std::vector<Vertex> order;     // position -> vertex
  std::vector<Vertex> position;  // vertex -> position
  Vertex source_count = 0;       // indegree-0 vertices occupy positions [0, source_count)
};

TopoOrder topo_sort(const Graph& g);

}  // namespace dagsp
