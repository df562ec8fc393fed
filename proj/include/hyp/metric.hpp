#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "hyp/graph.hpp"
#include "hyp/length.hpp"

namespace hyp {

/// A point of the metric graph: a vertex, or an interior point of an edge
/// (u < v) at `offset` eighths from u, 0 < offset < 8.
struct GraphPoint {
  Vertex u = 0;
  Vertex v = 0;
  std::int32_t offset = 0;

  static constexpr GraphPoint vertex(Vertex w) { return GraphPoint{w, w, 0}; }

  /// Point at `off` eighths from `a` towards `b`; endpoints collapse to vertices.
  static constexpr GraphPoint on_edge(Vertex a, Vertex b, std::int32_t off) {
    if (a > b) {
      std::swap(a, b);
      off = kUnitsPerEdge - off;
    }
    if (off <= 0) return vertex(a);
    if (off >= kUnitsPerEdge) return vertex(b);
    return GraphPoint{a, b, off};
  }

  constexpr bool is_vertex() const { return offset == 0; }

  /// Exits through which any path leaves the point: (vertex, cost in eighths).
  /// Returns the number of valid exits (1 for a vertex, 2 otherwise).
  constexpr int exits(std::array<std::pair<Vertex, std::int32_t>, 2>& out) const {
    out[0] = {u, offset};
    if (is_vertex()) return 1;
    out[1] = {v, kUnitsPerEdge - offset};
    return 2;
  }

  constexpr auto operator<=>(const GraphPoint&) const = default;
};

inline std::string to_string(const GraphPoint& p) {
  if (p.is_vertex()) return std::to_string(p.u);
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")@" + rational_string(p.offset, kUnitsPerEdge);
}

inline void validate_point(const Graph& g, const GraphPoint& p) {
  if (p.u < 0 || p.u >= g.order()) throw GraphError(GraphError::Kind::OutOfRange, "point " + to_string(p) + " is off the graph");
  if (p.is_vertex()) return;
  if (p.offset < 0 || p.offset >= kUnitsPerEdge || p.u >= p.v || !g.adjacent(p.u, p.v))
    throw GraphError(GraphError::Kind::OutOfRange, "point " + to_string(p) + " is not on an edge of the graph");
}

/// All-pairs vertex distances in whole edge units.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::int32_t n) : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1) {}

  std::int32_t order() const noexcept { return n_; }
  std::int32_t operator()(Vertex a, Vertex b) const {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }
  std::int32_t& at(Vertex a, Vertex b) {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> d_;
};

/// BFS from every vertex.
inline DistanceMatrix vertex_distances(const Graph& g) {
  const std::int32_t n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dm.at(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (dm(s, w) < 0) {
          dm.at(s, w) = dm(s, v) + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dm;
}

/// Exact metric-graph distance between two points.
inline EighthLength point_distance(const Graph& g, const DistanceMatrix& d, const GraphPoint& p, const GraphPoint& q) {
  (void)g;
  if (p == q) return EighthLength{0};
  std::array<std::pair<Vertex, std::int32_t>, 2> ep{};
  std::array<std::pair<Vertex, std::int32_t>, 2> eq{};
  const int np = p.exits(ep);
  const int nq = q.exits(eq);
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      best = std::min(best, ep[i].second + kUnitsPerEdge * d(ep[i].first, eq[j].first) + eq[j].second);
  if (!p.is_vertex() && !q.is_vertex() && p.u == q.u && p.v == q.v) best = std::min(best, std::abs(p.offset - q.offset));
  return EighthLength{best};
}

/// Vertices plus the interior points of every edge at a fixed spacing (in eighths).
/// Holds the full pairwise distance table over those points.
class PointGrid {
 public:
  PointGrid(const Graph& g, const DistanceMatrix& d, std::int32_t step) : g_(&g), step_(step) {
    if (step < 1 || kUnitsPerEdge % step != 0) throw RangeError("grid step must divide 8, got " + std::to_string(step));
    per_edge_ = kUnitsPerEdge / step - 1;
    const std::int32_t n = g.order();
    points_.reserve(static_cast<std::size_t>(n + per_edge_ * g.size()));
    for (Vertex v = 0; v < n; ++v) points_.push_back(GraphPoint::vertex(v));
    for (auto [u, v] : g.edges())
      for (std::int32_t k = 1; k <= per_edge_; ++k) points_.push_back(GraphPoint{u, v, k * step});

    const std::size_t count = points_.size();
    // distances from every grid point to every vertex
    std::vector<std::int32_t> to_vertex(count * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < count; ++i) {
      std::array<std::pair<Vertex, std::int32_t>, 2> ex{};
      const int ne = points_[i].exits(ex);
      for (Vertex w = 0; w < n; ++w) {
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (int e = 0; e < ne; ++e) best = std::min(best, ex[e].second + kUnitsPerEdge * d(ex[e].first, w));
        to_vertex[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)] = best;
      }
    }
    dist_.assign(count * count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        const GraphPoint& q = points_[j];
        std::array<std::pair<Vertex, std::int32_t>, 2> ex{};
        const int ne = q.exits(ex);
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (int e = 0; e < ne; ++e)
          best = std::min(best, to_vertex[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(ex[e].first)] + ex[e].second);
        const GraphPoint& p = points_[i];
        if (i == j) best = 0;
        else if (!p.is_vertex() && !q.is_vertex() && p.u == q.u && p.v == q.v)
          best = std::min(best, std::abs(p.offset - q.offset));
        dist_[i * count + j] = best;
      }
    }
  }

  std::int32_t step() const noexcept { return step_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<GraphPoint>& points() const noexcept { return points_; }

  /// Index of a point lying on this grid, or -1.
  std::int32_t index_of(const GraphPoint& p) const {
    if (p.is_vertex()) return p.u;
    if (p.offset % step_ != 0) return -1;
    const std::int32_t e = g_->edge_index(p.u, p.v);
    if (e < 0) return -1;
    return g_->order() + e * per_edge_ + (p.offset / step_ - 1);
  }

  std::int32_t distance(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }
  const std::int32_t* row(std::size_t i) const { return dist_.data() + i * points_.size(); }

 private:
  const Graph* g_;
  std::int32_t step_;
  std::int32_t per_edge_ = 0;
  std::vector<GraphPoint> points_;
  std::vector<std::int32_t> dist_;
};

inline EighthLength diam_vertices(const Graph& g, const DistanceMatrix& d) {
  std::int32_t best = 0;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) best = std::max(best, d(a, b));
  return EighthLength::edges(best);
}

inline EighthLength diam_vertices(const Graph& g) { return diam_vertices(g, vertex_distances(g)); }

/// Diameter of the whole metric graph, maximizing over grid points at `step`
/// eighths (default 1/4 edge).
inline EighthLength diam_graph(const Graph& g, const DistanceMatrix& d, std::int32_t step = 2) {
  const PointGrid grid(g, d, step);
  std::int32_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::int32_t* r = grid.row(i);
    for (std::size_t j = i + 1; j < grid.size(); ++j) best = std::max(best, r[j]);
  }
  return EighthLength{best};
}

inline EighthLength diam_graph(const Graph& g, std::int32_t step = 2) { return diam_graph(g, vertex_distances(g), step); }

}  // namespace hyp
