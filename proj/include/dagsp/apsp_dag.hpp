#pragma once

#include <cstdint>
#include <vector>

#include "dagsp/ancestors.hpp"
#include "dagsp/graph.hpp"
#include "dagsp/order.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// Successor tables of the per-target shortest-path trees.  next(v, u) is the
// vertex that follows u on the canonical shortest path from u to v, or
// kAbsent when u is not an ancestor of v.  Tables are dense arrays of length
// n, allocated lazily the first time a target gains an ancestor.
class TreeSet {
 public:
  static constexpr Vertex kAbsent = -1;

  TreeSet() = default;
  explicit TreeSet(Vertex n) : n_(n), next_(static_cast<std::size_t>(n)) {}

  Vertex size() const { return n_; }

  bool has_tree(Vertex v) const { return !next_[v].empty(); }

  Vertex next(Vertex v, Vertex u) const {
    const auto& t = next_[v];
    return t.empty() ? kAbsent : t[u];
  }

  // Mutable dense table for target v, allocated on first use.
  std::vector<Vertex>& table(Vertex v) {
    auto& t = next_[v];
    if (t.empty()) t.assign(static_cast<std::size_t>(n_), kAbsent);
    return t;
  }
  const std::vector<Vertex>& table_const(Vertex v) const { return next_[v]; }

 private:
  Vertex n_ = 0;
  std::vector<std::vector<Vertex>> next_;
};

// Follows successor links from u to v.  Returns {u, ..., v}, or {v} when
// u == v, or an empty vector when v's tree does not contain u.  Throws
// MalformedTree if a walk breaks off or exceeds n steps.
std::vector<Vertex> extract_path(const TreeSet& trees, Vertex u, Vertex v);

struct TreeStats {
  std::vector<std::int64_t> leaf_counts;  // per target vertex
  std::int64_t sum_indeg_leaf = 0;        // sum over v of indeg(v) * leaf(v)
  std::int64_t max_leaf = 0;
  double mean_leaf = 0.0;
};

TreeStats tree_stats(const TreeSet& trees, const Graph& g);

// Instrumentation of the output-sensitive sweep: how many route selections
// ran (one per tree leaf), their total cost in scanned in-arcs, and how many
// successor-table entries were written while splicing.
struct WorkCounters {
  std::uint64_t select_runs = 0;
  std::uint64_t select_cost = 0;
  std::uint64_t splice_steps = 0;
};

struct LexApspResult {
  DistMatrix dist;
  TreeSet trees;
  TreeStats stats;
  WorkCounters work;
};

// Output-sensitive all-pairs shortest paths for DAGs.  Targets are processed
// in topological order; for each target the canonical (lexicographically
// first under topological numbering) shortest-path tree of its ancestors is
// grown by splicing fragments of already-final trees, so the per-target cost
// is driven by the tree's leaf count rather than its size.  audit_splice
// turns on an O(path) consistency check at every splice cut-off.
LexApspResult apsp_lex_first(const Graph& g);
LexApspResult apsp_lex_first(const Graph& g, const TopoOrder& topo,
                             const AncestorSets& anc, bool audit_splice = false);

// Baseline: one dynamic-programming sweep of the whole topological order per
// source vertex.
DistMatrix apsp_standard_dag(const Graph& g);
DistMatrix apsp_standard_dag(const Graph& g, const TopoOrder& topo);

enum class SweepDirection { forward, backward };

struct BidirApspResult {
  DistMatrix dist;          // always oriented as the input graph
  TreeSet trees;            // trees of the winning sweep (reversed graph's if backward)
  SweepDirection winner = SweepDirection::forward;
  WorkCounters forward_work;
  WorkCounters backward_work;
};

// Runs the output-sensitive sweep on the graph and its reversal in lockstep,
// one target vertex per side per round, and returns as soon as either side
// finishes (forward wins ties).  Distances computed by the backward sweep are
// transposed back into the input orientation.
BidirApspResult apsp_bidirectional(const Graph& g);
BidirApspResult apsp_bidirectional(const Graph& g, const TopoOrder& topo_fwd,
                                   const AncestorSets& anc_fwd, const Graph& rev,
                                   const TopoOrder& topo_bwd,
                                   const AncestorSets& anc_bwd,
                                   bool audit_splice = false);

}  // namespace dagsp
