#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dagsp/graph.hpp"
#include "dagsp/order.hpp"
#include "dagsp/types.hpp"

namespace dagsp {

// Per-vertex ancestor sets of a DAG, stored as packed bitsets whose bit index
// is the ancestor's topological position.  That makes "iterate ancestors in
// ascending topological order" a linear scan over set bits.
class AncestorSets {
 public:
  AncestorSets() = default;

  Vertex size() const { return n_; }

  // Number of ancestors of v (v itself never counts).
  std::int64_t count(Vertex v) const { return counts_[v]; }

  bool contains_position(Vertex v, Vertex ancestor_pos) const {
    const std::uint64_t word =
        bits_[row_offset(v) + static_cast<std::size_t>(ancestor_pos >> 6)];
    return (word >> (ancestor_pos & 63)) & 1u;
  }

  bool is_ancestor(Vertex u, Vertex v) const {
    return contains_position(v, position_[u]);
  }

  // Ancestors of v as vertex ids, ascending by topological position.
  std::vector<Vertex> ancestors_of(Vertex v) const;

  // Calls fn(position) for each ancestor of v, ascending.
  template <typename F>
  void for_each_ancestor_position(Vertex v, F&& fn) const {
    const std::uint64_t* row = bits_.data() + row_offset(v);
    for (std::size_t wi = 0; wi < words_; ++wi) {
      std::uint64_t word = row[wi];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

 private:
  friend AncestorSets ancestor_sets(const Graph& g, const TopoOrder& topo);

  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * words_;
  }

  Vertex n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;      // row per vertex id
  std::vector<std::int64_t> counts_;
  std::vector<Vertex> position_;         // copy of topo.position
};

// set(v) = union over direct ancestors u of (set(u) + {u}), computed by one
// bitset sweep along the topological order.
AncestorSets ancestor_sets(const Graph& g, const TopoOrder& topo);

}  // namespace dagsp
