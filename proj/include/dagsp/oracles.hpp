#pragma once

#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/order.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// Brute-force reference implementations.  Deliberately simple and slow, and
// sharing no relaxation code with the algorithms they check.

struct FloydWarshallResult {
  DistMatrix dist;
  bool negative_cycle = false;  // some diagonal entry went below zero
};

FloydWarshallResult floyd_warshall(const Graph& g);

// table(v, k) = minimum length of a walk from the source to v using at most
// k edges (rows 0..max_edges, computed without intra-row propagation).
class LayeredDistTable {
 public:
  LayeredDistTable(const Graph& g, Vertex source, int max_edges);

  int max_edges() const { return max_edges_; }
  ExtDist at(Vertex v, int k) const {
    return rows_[static_cast<std::size_t>(k) * n_ + static_cast<std::size_t>(v)];
  }

 private:
  std::size_t n_ = 0;
  int max_edges_ = 0;
  std::vector<ExtDist> rows_;
};

// For each vertex v with minimum edge count l(v) from the source, the least
// walk length using at most l(v) + t edges; infinity when v is unreachable.
DistVector t_light_oracle(const Graph& g, Vertex source, int t);

// Exhaustive canonical shortest paths into v on a DAG: for every ancestor u,
// the minimum-weight u -> v path whose reversed sequence of topological
// positions is lexicographically smallest.  Indexed by u; non-ancestors get
// an empty path.  Throws SizeLimit when the graph has more than 12 vertices.
std::vector<std::vector<Vertex>> lex_first_paths_bruteforce(const Graph& g,
                                                            const TopoOrder& topo,
                                                            Vertex v);

}  // namespace dagsp
