#include "dagsp/apsp_dag.hpp"

#include <algorithm>
#include <utility>

#include "dagsp/error.hpp"

namespace dagsp {

std::vector<Vertex> extract_path(const TreeSet& trees, Vertex u, Vertex v) {
  if (u == v) return {v};
  if (trees.next(v, u) == TreeSet::kAbsent) return {};

  std::vector<Vertex> path{u};
  Vertex cur = u;
  Vertex steps = 0;
  while (cur != v) {
    cur = trees.next(v, cur);
    if (cur == TreeSet::kAbsent || ++steps > trees.size())
      throw MalformedTree("successor walk does not reach its target");
    path.push_back(cur);
  }
  return path;
}

TreeStats tree_stats(const TreeSet& trees, const Graph& g) {
  const Vertex n = g.vertex_count();
  TreeStats stats;
  stats.leaf_counts.assign(static_cast<std::size_t>(n), 0);

  // A tree member is a leaf when no other member's successor link targets it.
  std::vector<char> targeted(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!trees.has_tree(v)) continue;
    const auto& table = trees.table_const(v);
    std::fill(targeted.begin(), targeted.end(), 0);
    for (Vertex u = 0; u < n; ++u)
      if (table[u] != TreeSet::kAbsent) targeted[table[u]] = 1;
    std::int64_t leaves = 0;
    for (Vertex u = 0; u < n; ++u)
      if (table[u] != TreeSet::kAbsent && !targeted[u]) ++leaves;
    stats.leaf_counts[v] = leaves;
    stats.sum_indeg_leaf += g.in_degree(v) * leaves;
    stats.max_leaf = std::max(stats.max_leaf, leaves);
    total += leaves;
  }
  stats.mean_leaf = n > 0 ? static_cast<double>(total) / static_cast<double>(n) : 0.0;
  return stats;
}

namespace {

struct PosArc {
  Vertex tail_pos = 0;
  Weight weight = 0;
};

// Resumable runner for the output-sensitive sweep; one step() finalizes the
// distances into (and the tree of) one target vertex.  Works internally in
// topological positions: row k of dist_ holds distances from the vertex at
// position k, column i distances into the vertex at position i.
class LexSweep {
 public:
  LexSweep(const Graph& g, const TopoOrder& topo, const AncestorSets& anc, bool audit)
      : topo_(topo),
        anc_(anc),
        audit_(audit),
        n_(g.vertex_count()),
        next_i_(topo.source_count),
        trees_(g.vertex_count()),
        dist_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
              ExtDist::infinity()) {
    for (Vertex k = 0; k < n_; ++k) dist_[cell(k, k)] = ExtDist::zero();
    in_by_pos_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      auto& arcs = in_by_pos_[topo.position[v]];
      arcs.reserve(static_cast<std::size_t>(g.in_degree(v)));
      for (const Arc& a : g.in(v)) arcs.push_back({topo.position[a.to], a.weight});
    }
  }

  bool done() const { return next_i_ >= n_; }

  void step() {
    const Vertex i = next_i_++;
    const Vertex vi = topo_.order[i];
    if (anc_.count(vi) == 0) return;

    auto& tree_i = trees_.table(vi);
    const auto& arcs = in_by_pos_[i];

    anc_.for_each_ancestor_position(vi, [&](Vertex k) {
      const Vertex vk = topo_.order[k];
      if (tree_i[vk] != TreeSet::kAbsent) return;  // spliced in earlier

      // Route selection: the direct ancestor minimizing the distance from vk,
      // breaking ties toward the smaller topological position.  At least one
      // candidate is finite because some vk -> vi path exists, and every
      // dist_ entry read here was finalized by an earlier step.
      work_.select_runs += 1;
      work_.select_cost += arcs.size();
      const ExtDist* row_k = dist_.data() + cell(k, 0);
      ExtDist best;
      Vertex best_j = kNoVertex;
      Weight best_w = 0;
      for (const PosArc& a : arcs) {
        const ExtDist dkj = row_k[a.tail_pos];
        if (dkj.is_infinite()) continue;
        const ExtDist cand = dkj + a.weight;
        if (best_j == kNoVertex || cand < best ||
            (cand == best && a.tail_pos < best_j)) {
          best = cand;
          best_j = a.tail_pos;
          best_w = a.weight;
        }
      }
      if (best_j == kNoVertex)
        throw MalformedTree("ancestor without a finite route candidate");
      const Vertex vj = topo_.order[best_j];

      // Splice the vk -> vj fragment of vj's final tree into vi's tree,
      // extending each copied vertex's distance by the selected arc.  The
      // walk stops at the first vertex already present: its remaining path
      // is guaranteed to coincide, so copying further would be pure rework.
      Vertex cur = vk;
      const std::vector<Vertex>* tree_j = nullptr;
      if (cur != vj) {
        if (!trees_.has_tree(vj))
          throw MalformedTree("route endpoint has no tree to splice from");
        tree_j = &trees_.table_const(vj);
      }
      while (cur != vj && tree_i[cur] == TreeSet::kAbsent) {
        dist_[cell(topo_.position[cur], i)] =
            dist_[cell(topo_.position[cur], best_j)] + best_w;
        tree_i[cur] = (*tree_j)[cur];
        work_.splice_steps += 1;
        cur = tree_i[cur];
      }
      if (audit_ && cur != vj) audit_overlap(tree_i, *tree_j, cur, vj, vi);
      if (tree_i[vj] == TreeSet::kAbsent) {
        dist_[cell(best_j, i)] = ExtDist(best_w);
        tree_i[vj] = vi;
        work_.splice_steps += 1;
      }
    });
  }

  DistMatrix take_dist() const {
    DistMatrix m(n_);
    for (Vertex u = 0; u < n_; ++u) {
      const ExtDist* src = dist_.data() + cell(topo_.position[u], 0);
      auto row = m.row(u);
      for (Vertex v = 0; v < n_; ++v) row[v] = src[topo_.position[v]];
    }
    return m;
  }

  TreeSet take_trees() { return std::move(trees_); }
  const WorkCounters& work() const { return work_; }

 private:
  std::size_t cell(Vertex row_pos, Vertex col_pos) const {
    return static_cast<std::size_t>(row_pos) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col_pos);
  }

  // Cut-off consistency check: when a splice walk stops at a vertex already
  // in vi's tree, the rest of that vertex's path must equal the fragment we
  // would have copied (through vj, then the new arc into vi).
  void audit_overlap(const std::vector<Vertex>& tree_i,
                     const std::vector<Vertex>& tree_j, Vertex cut, Vertex vj,
                     Vertex vi) const {
    Vertex cur = cut;
    Vertex steps = 0;
    while (cur != vj) {
      if (tree_i[cur] != tree_j[cur] || tree_j[cur] == TreeSet::kAbsent ||
          ++steps > n_)
        throw MalformedTree("splice cut-off diverges from existing tree path");
      cur = tree_j[cur];
    }
    if (tree_i[vj] != vi)
      throw MalformedTree("splice cut-off path does not rejoin the target");
  }

  const TopoOrder& topo_;
  const AncestorSets& anc_;
  bool audit_ = false;
  Vertex n_ = 0;
  Vertex next_i_ = 0;
  TreeSet trees_;
  std::vector<ExtDist> dist_;                // position-space distance table
  std::vector<std::vector<PosArc>> in_by_pos_;
  WorkCounters work_;
};

}  // namespace

LexApspResult apsp_lex_first(const Graph& g) {
  const TopoOrder topo = topo_sort(g);
  const AncestorSets anc = ancestor_sets(g, topo);
  return apsp_lex_first(g, topo, anc);
}

LexApspResult apsp_lex_first(const Graph& g, const TopoOrder& topo,
                             const AncestorSets& anc, bool audit_splice) {
  LexSweep sweep(g, topo, anc, audit_splice);
  while (!sweep.done()) sweep.step();

  LexApspResult result;
  result.dist = sweep.take_dist();
  result.work = sweep.work();
  result.trees = sweep.take_trees();
  result.stats = tree_stats(result.trees, g);
  return result;
}

DistMatrix apsp_standard_dag(const Graph& g) { return apsp_standard_dag(g, topo_sort(g)); }

DistMatrix apsp_standard_dag(const Graph& g, const TopoOrder& topo) {
  const Vertex n = g.vertex_count();
  DistMatrix out(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = out.row(s);
    row[s] = ExtDist::zero();
    for (Vertex j = 0; j < n; ++j) {
      const Vertex v = topo.order[j];
      ExtDist dv = row[v];
      for (const Arc& a : g.in(v)) {
        const ExtDist du = row[a.to];
        if (du.is_infinite()) continue;
        const ExtDist cand = du + a.weight;
        if (cand < dv) dv = cand;
      }
      row[v] = dv;
    }
  }
  return out;
}

BidirApspResult apsp_bidirectional(const Graph& g) {
  const Graph rev = reverse_graph(g);
  const TopoOrder topo_fwd = topo_sort(g);
  const TopoOrder topo_bwd = topo_sort(rev);
  const AncestorSets anc_fwd = ancestor_sets(g, topo_fwd);
  const AncestorSets anc_bwd = ancestor_sets(rev, topo_bwd);
  return apsp_bidirectional(g, topo_fwd, anc_fwd, rev, topo_bwd, anc_bwd);
}

BidirApspResult apsp_bidirectional(const Graph& g, const TopoOrder& topo_fwd,
                                   const AncestorSets& anc_fwd, const Graph& rev,
                                   const TopoOrder& topo_bwd,
                                   const AncestorSets& anc_bwd, bool audit_splice) {
  LexSweep fwd(g, topo_fwd, anc_fwd, audit_splice);
  LexSweep bwd(rev, topo_bwd, anc_bwd, audit_splice);

  BidirApspResult result;
  // One target per side per round, forward first, until either side has
  // finalized its whole order; ties therefore go to the forward sweep.
  while (true) {
    if (fwd.done()) {
      result.winner = SweepDirection::forward;
      break;
    }
    fwd.step();
    if (fwd.done()) {
      result.winner = SweepDirection::forward;
      break;
    }
    if (!bwd.done()) bwd.step();
    if (bwd.done()) {
      result.winner = SweepDirection::backward;
      break;
    }
  }

  result.forward_work = fwd.work();
  result.backward_work = bwd.work();
  if (result.winner == SweepDirection::forward) {
    result.dist = fwd.take_dist();
    result.trees = fwd.take_trees();
  } else {
    // The backward sweep computed distances in the reversed graph; transpose
    // them back.  Its trees stay oriented as reversed-graph trees.
    result.dist = bwd.take_dist().transposed();
    result.trees = bwd.take_trees();
  }
  return result;
}

}  // namespace dagsp
