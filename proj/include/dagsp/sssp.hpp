#pragma once

#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/order.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// Optional witness record: parent[v] is the tail of the arc that produced the
// current estimate D(v), via_weight[v] its weight (parallel edges make the
// weight ambiguous otherwise).
struct ParentTrace {
  std::vector<Vertex> parent;
  std::vector<Weight> via_weight;

  static ParentTrace make(Vertex n) {
    return {std::vector<Vertex>(n, kNoVertex), std::vector<Weight>(n, 0)};
  }
  bool tracked() const { return !parent.empty(); }
};

// One sweep over the linear order relaxing only forward edges (tail precedes
// head).  Estimates updated earlier in the sweep feed later relaxations, so a
// single sweep settles any all-forward path completely.
DistVector forward_pass(const Graph& g, const BfsOrder& ord, DistVector d,
                        ParentTrace* trace = nullptr);

// The mirror sweep, last position to first, relaxing only backward edges.
DistVector backward_pass(const Graph& g, const BfsOrder& ord, DistVector d,
                         ParentTrace* trace = nullptr);

struct SsspReport {
  DistVector dist;
  ParentTrace trace;       // empty unless parent tracking was requested
  int iterations_run = 0;  // sweep rounds requested, or full edge scans run
  bool negative_cycle = false;
};

// Bounded-iteration single-source shortest paths: one forward sweep, then t
// rounds of (backward sweep, forward sweep) over the BFS-extended order.
// After t rounds every estimate is at most the length of the shortest walk
// using at most t edges beyond the minimum edge count to that vertex.  With
// t = n-2 the output matches Bellman-Ford; only then is the negative_cycle
// flag meaningful (it is computed by probing one extra sweep pair).
SsspReport t_light_sssp(const Graph& g, Vertex source, int t,
                        bool track_parents = true);

// One in-place Bellman-Ford relaxation scan over all edges, ascending by
// (tail, head).  Returns true when some estimate improved.
bool bellman_ford_scan(const Graph& g, DistVector& d, ParentTrace* trace = nullptr);

// Classic Bellman-Ford: up to n-1 scans with early exit at a fixpoint, then
// one probe scan whose outcome sets negative_cycle.
SsspReport bellman_ford(const Graph& g, Vertex source, bool track_parents = true);

// True iff one extra backward+forward sweep pair can still lower some entry
// of d.  Intended for the output of a full (t = n-2) run, where a decrease is
// equivalent to a negative cycle reachable from the source.
bool detect_negative_cycle(const Graph& g, const BfsOrder& ord, const DistVector& d);

}  // namespace dagsp
