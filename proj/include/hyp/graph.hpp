#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyp/errors.hpp"

namespace hyp {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

/// Simple connected graph with unit-length edges. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::int32_t order() const noexcept { return n_; }
  std::int32_t size() const noexcept { return static_cast<std::int32_t>(edges_.size()); }

  /// Edges sorted lexicographically, each with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

  /// Position of edge {u,v} in edges(), or -1.
  std::int32_t edge_index(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    return index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }

  bool is_tree() const noexcept { return size() == n_ - 1; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  friend Graph build_graph(std::int32_t n, std::vector<Edge> edges);

  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::int32_t> index_;
};

namespace detail {

inline std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace detail

/// Validates and builds a graph. Throws GraphError naming the offending element.
inline Graph build_graph(std::int32_t n, std::vector<Edge> edges) {
  if (n < 1) throw GraphError(GraphError::Kind::OutOfRange, "vertex count must be positive, got " + std::to_string(n));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::OutOfRange, "edge " + detail::edge_str(u, v) + " has a vertex outside 0.." +
                                                         std::to_string(n - 1));
    if (u == v) throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge " + detail::edge_str(dup->first, dup->second));

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto [u, v] = g.edges_[i];
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
    g.index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
        static_cast<std::int32_t>(i);
    g.index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] =
        static_cast<std::int32_t>(i);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());

  // connectivity: the first vertex not reached from 0 is reported
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)])
      throw GraphError(GraphError::Kind::Disconnected, "graph is disconnected: vertex " + std::to_string(v) +
                                                           " is unreachable from vertex 0");
  }
  return g;
}

/// Induced subgraph on a sorted vertex subset, relabeled 0..k-1 in the same order.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& sorted_vertices) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i)
    relabel[static_cast<std::size_t>(sorted_vertices[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const Vertex a = relabel[static_cast<std::size_t>(u)];
    const Vertex b = relabel[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return build_graph(static_cast<std::int32_t>(sorted_vertices.size()), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge-list format: "n m" then m lines "u v". Output is sorted with u < v.

inline Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw GraphError(GraphError::Kind::Parse, "edge list: expected header \"n m\"");
  if (n < 1 || m < 0) throw GraphError(GraphError::Kind::Parse, "edge list: invalid header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v))
      throw GraphError(GraphError::Kind::Parse, "edge list: expected " + std::to_string(m) + " edges, read " +
                                                    std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::OutOfRange, "edge " + detail::edge_str(static_cast<Vertex>(u), static_cast<Vertex>(v)) +
                                                         " has a vertex outside 0.." + std::to_string(n - 1));
  }
  std::string rest;
  if (in >> rest) throw GraphError(GraphError::Kind::Parse, "edge list: trailing data \"" + rest + "\"");
  return build_graph(static_cast<std::int32_t>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace hyp
