#include "dagsp/ancestors.hpp"

#include <algorithm>

namespace dagsp {

AncestorSets ancestor_sets(const Graph& g, const TopoOrder& topo) {
  const Vertex n = g.vertex_count();

  AncestorSets sets;
  sets.n_ = n;
  sets.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  sets.bits_.assign(static_cast<std::size_t>(n) * sets.words_, 0);
  sets.counts_.assign(static_cast<std::size_t>(n), 0);
  sets.position_ = topo.position;

  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = topo.order[i];
    std::uint64_t* row_v = sets.bits_.data() + sets.row_offset(v);
    for (const Arc& a : g.in(v)) {
      const Vertex u = a.to;  // direct ancestor; finalized earlier in the order
      const std::uint64_t* row_u = sets.bits_.data() + sets.row_offset(u);
      for (std::size_t w = 0; w < sets.words_; ++w) row_v[w] |= row_u[w];
      const Vertex pu = topo.position[u];
      row_v[static_cast<std::size_t>(pu) >> 6] |= std::uint64_t{1} << (pu & 63);
    }
    std::int64_t count = 0;
    for (std::size_t w = 0; w < sets.words_; ++w)
      count += std::popcount(row_v[w]);
    sets.counts_[v] = count;
  }
  return sets;
}

std::vector<Vertex> AncestorSets::ancestors_of(Vertex v) const {
  std::vector<Vertex> result;
  result.reserve(static_cast<std::size_t>(counts_[v]));
  // Bits are keyed by topological position; map each one back to its vertex
  // id and return the set in ascending id order.
  std::vector<Vertex> order(static_cast<std::size_t>(n_));
  for (Vertex u = 0; u < n_; ++u) order[position_[u]] = u;
  for_each_ancestor_position(v, [&](Vertex pos) { result.push_back(order[pos]); });
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace dagsp
