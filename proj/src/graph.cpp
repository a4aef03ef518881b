#include "dagsp/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dagsp/error.hpp"

namespace dagsp {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.tail) + ", " + std::to_string(e.head) + ", " +
         std::to_string(e.weight) + ")";
}

}  // namespace

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("vertex count must be nonnegative");

  // Any simple path has at most n-1 edges, so capping |weight| at
  // kFiniteDistCeiling / n keeps every finite distance within the ceiling.
  const Weight limit = n > 0 ? kFiniteDistCeiling / n : kFiniteDistCeiling;
  for (const Edge& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw GraphError("edge endpoint out of range: " + edge_text(e));
    if (e.tail == e.head) throw GraphError("self-loop rejected: " + edge_text(e));
    if (e.weight > limit || e.weight < -limit)
      throw GraphError("weight magnitude too large for distance arithmetic: " +
                       edge_text(e));
  }

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(edges.size());
  g.out_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.out_arcs_.resize(edges.size());
  g.in_arcs_.resize(edges.size());

  for (const Edge& e : edges) {
    ++g.out_off_[static_cast<std::size_t>(e.tail) + 1];
    ++g.in_off_[static_cast<std::size_t>(e.head) + 1];
  }
  for (Vertex v = 0; v < n; ++v) {
    g.out_off_[static_cast<std::size_t>(v) + 1] += g.out_off_[v];
    g.in_off_[static_cast<std::size_t>(v) + 1] += g.in_off_[v];
  }

  {
    std::vector<std::int64_t> out_cursor(g.out_off_.begin(), g.out_off_.end() - 1);
    std::vector<std::int64_t> in_cursor(g.in_off_.begin(), g.in_off_.end() - 1);
    for (const Edge& e : edges) {
      g.out_arcs_[out_cursor[e.tail]++] = {e.head, e.weight};
      g.in_arcs_[in_cursor[e.head]++] = {e.tail, e.weight};
    }
  }

  // Deterministic iteration: ascending neighbor id within each vertex;
  // parallel edges keep their input order.
  auto sort_buckets = [n](std::vector<Arc>& arcs, const std::vector<std::int64_t>& off) {
    for (Vertex v = 0; v < n; ++v)
      std::stable_sort(arcs.begin() + off[v], arcs.begin() + off[v + 1],
                       [](const Arc& a, const Arc& b) { return a.to < b.to; });
  };
  sort_buckets(g.out_arcs_, g.out_off_);
  sort_buckets(g.in_arcs_, g.in_off_);

  if (!edges.empty()) {
    g.min_w_ = g.max_w_ = edges.front().weight;
    for (const Edge& e : edges) {
      g.min_w_ = std::min(g.min_w_, e.weight);
      g.max_w_ = std::max(g.max_w_, e.weight);
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (Vertex v = 0; v < n_; ++v)
    for (const Arc& a : out(v)) result.push_back({v, a.to, a.weight});
  return result;
}

Graph Graph::reversed() const {
  Graph r;
  r.n_ = n_;
  r.m_ = m_;
  r.out_off_ = in_off_;
  r.out_arcs_ = in_arcs_;
  r.in_off_ = out_off_;
  r.in_arcs_ = out_arcs_;
  r.min_w_ = min_w_;
  r.max_w_ = max_w_;
  return r;
}

namespace {

// Parses exactly `count` integer fields from a line, rejecting anything else.
void parse_fields(const std::string& line, std::int64_t* fields, int count,
                  const char* what) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i) {
    if (!(ss >> fields[i]))
      throw GraphError(std::string("malformed ") + what + " line: \"" + line + "\"");
  }
  std::string extra;
  if (ss >> extra)
    throw GraphError(std::string("trailing garbage on ") + what + " line: \"" +
                     line + "\"");
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw GraphError("empty graph input");

  std::int64_t header[2];
  parse_fields(line, header, 2, "header");
  const std::int64_t n = header[0];
  const std::int64_t m = header[1];
  if (n < 0 || m < 0) throw GraphError("negative count in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw GraphError("expected " + std::to_string(m) + " edge lines, got " +
                       std::to_string(i));
    std::int64_t f[3];
    parse_fields(line, f, 3, "edge");
    edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), f[2]});
  }

  // Nothing but whitespace may follow the last edge line.
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw GraphError("trailing garbage after edge list: \"" + line + "\"");
  }

  return build_graph(static_cast<Vertex>(n), edges);
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
}

}  // namespace dagsp
