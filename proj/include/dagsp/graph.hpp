#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dagsp/types.hpp"

namespace dagsp {

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One entry of an adjacency list.  `to` is the neighbor: the edge head in the
// outgoing view, the edge tail in the incoming view.
struct Arc {
  Vertex to = 0;
  Weight weight = 0;
};

// Immutable edge-weighted digraph held in compressed adjacency form, with
// both outgoing and incoming views.  Within each vertex the arcs are sorted
// ascending by neighbor id, so every traversal is deterministic.  Parallel
// edges are allowed; self-loops are not.
class Graph {
 public:
  Graph() = default;

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const Arc> out(Vertex v) const {
    return {out_arcs_.data() + out_off_[v], out_arcs_.data() + out_off_[v + 1]};
  }
  std::span<const Arc> in(Vertex v) const {
    return {in_arcs_.data() + in_off_[v], in_arcs_.data() + in_off_[v + 1]};
  }

  std::int64_t out_degree(Vertex v) const { return out_off_[v + 1] - out_off_[v]; }
  std::int64_t in_degree(Vertex v) const { return in_off_[v + 1] - in_off_[v]; }

  Weight min_weight() const { return min_w_; }
  Weight max_weight() const { return max_w_; }

  // Every edge as (tail, head, weight), sorted by tail then head.
  std::vector<Edge> edges() const;

  Graph reversed() const;

 private:
  friend Graph build_graph(Vertex n, std::span<const Edge> edges);

  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> out_off_;
  std::vector<Arc> out_arcs_;
  std::vector<std::int64_t> in_off_;
  std::vector<Arc> in_arcs_;
  Weight min_w_ = 0;
  Weight max_w_ = 0;
};

// Validates endpoints, rejects self-loops, and checks that n * max|weight|
// cannot overflow distance arithmetic.  Throws GraphError.
Graph build_graph(Vertex n, std::span<const Edge> edges);

inline Graph reverse_graph(const Graph& g) { return g.reversed(); }

// Text format: first line "n m", then m lines "tail head weight" (0-based).
// The parser rejects malformed lines and trailing garbage with GraphError.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

}  // namespace dagsp
