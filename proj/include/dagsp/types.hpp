#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace dagsp {

using Vertex = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;

// Largest magnitude a finite distance is allowed to reach.  Graph construction
// rejects weight sets where n * max|weight| could exceed this, so sums of two
// finite distances (used when stitching paths through a sampled vertex) stay
// clear of signed overflow.
inline constexpr std::int64_t kFiniteDistCeiling =
    std::numeric_limits<std::int64_t>::max() / 4;

// Signed path length extended with an absorbing +infinity for "no path yet".
class ExtDist {
 public:
  constexpr ExtDist() = default;  // +infinity
  constexpr explicit ExtDist(std::int64_t v) : raw_(v) {}

  static constexpr ExtDist infinity() { return ExtDist{}; }
  static constexpr ExtDist zero() { return ExtDist{0}; }

  constexpr bool is_infinite() const { return raw_ == kInfRaw; }
  constexpr std::int64_t value() const {
    assert(!is_infinite());
    return raw_;
  }

  friend constexpr ExtDist operator+(ExtDist a, Weight w) {
    return a.is_infinite() ? a : ExtDist{a.raw_ + w};
  }
  friend constexpr ExtDist operator+(ExtDist a, ExtDist b) {
    return (a.is_infinite() || b.is_infinite()) ? infinity()
                                                : ExtDist{a.raw_ + b.raw_};
  }

  // Infinity is stored as INT64_MAX, so raw comparison orders it above every
  // finite value.
  friend constexpr auto operator<=>(ExtDist a, ExtDist b) = default;

 private:
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();
  std::int64_t raw_ = kInfRaw;
};

using DistVector = std::vector<ExtDist>;

std::string dist_to_string(ExtDist d);

// Dense n-by-n table of pairwise distances, row = source, column = target.
class DistMatrix {
 public:
  DistMatrix() = default;
  explicit DistMatrix(Vertex n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  static DistMatrix with_zero_diagonal(Vertex n);

  Vertex size() const { return n_; }

  ExtDist operator()(Vertex u, Vertex v) const { return cells_[index(u, v)]; }
  ExtDist& operator()(Vertex u, Vertex v) { return cells_[index(u, v)]; }

  std::span<const ExtDist> row(Vertex u) const {
    return {cells_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }
  std::span<ExtDist> row(Vertex u) {
    return {cells_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }

  DistMatrix transposed() const;

  friend bool operator==(const DistMatrix&, const DistMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  Vertex n_ = 0;
  std::vector<ExtDist> cells_;
};

// Writes "src,dst,dist" rows for every ordered pair; unreachable prints "inf".
void write_dist_csv(std::ostream& out, const DistMatrix& m);

}  // namespace dagsp
