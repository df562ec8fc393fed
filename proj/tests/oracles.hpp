#pragma once

// Reference computations on the subdivided graph: every edge is split into k
// equal pieces, so points at multiples of 8/k eighths become ordinary nodes
// and plain BFS gives exact distances between them.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "hyp/graph.hpp"
#include "hyp/metric.hpp"

namespace oracle {

using hyp::Graph;
using hyp::GraphPoint;
using hyp::Vertex;

class Subdivided {
 public:
  Subdivided(const Graph& g, std::int32_t k) : g_(g), k_(k), step_(hyp::kUnitsPerEdge / k) {
    const auto& edges = g.edges();
    nodes_ = g.order() + static_cast<std::int32_t>(edges.size()) * (k - 1);
    adj_.resize(static_cast<std::size_t>(nodes_));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::int32_t prev = edges[e].first;
      for (std::int32_t j = 1; j <= k; ++j) {
        const std::int32_t cur = j == k ? edges[e].second : interior(static_cast<std::int32_t>(e), j);
        adj_[static_cast<std::size_t>(prev)].push_back(cur);
        adj_[static_cast<std::size_t>(cur)].push_back(prev);
        prev = cur;
      }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    dist_.assign(static_cast<std::size_t>(nodes_), {});
    for (std::int32_t s = 0; s < nodes_; ++s) dist_[static_cast<std::size_t>(s)] = bfs(s);
  }

  std::int32_t size() const { return nodes_; }

  std::int32_t node(const GraphPoint& p) const {
    if (p.is_vertex()) return p.u;
    const std::int32_t e = g_.edge_index(p.u, p.v);
    return interior(e, p.offset / step_);
  }

  GraphPoint point(std::int32_t node) const {
    if (node < g_.order()) return GraphPoint::vertex(node);
    const std::int32_t rel = node - g_.order();
    const auto [u, v] = g_.edges()[static_cast<std::size_t>(rel / (k_ - 1))];
    return GraphPoint::on_edge(u, v, (rel % (k_ - 1) + 1) * step_);
  }

  /// Distance in eighths.
  std::int32_t dist(std::int32_t a, std::int32_t b) const { return dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * step_; }

  std::uint64_t count_shortest_paths(std::int32_t s, std::int32_t t) const {
    std::vector<std::uint64_t> sigma(static_cast<std::size_t>(nodes_), 0);
    const auto& ds = dist_[static_cast<std::size_t>(s)];
    std::vector<std::int32_t> order(static_cast<std::size_t>(nodes_));
    for (std::int32_t i = 0; i < nodes_; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ds[static_cast<std::size_t>(a)] < ds[static_cast<std::size_t>(b)]; });
    sigma[static_cast<std::size_t>(s)] = 1;
    for (auto v : order)
      for (auto w : adj_[static_cast<std::size_t>(v)])
        if (ds[static_cast<std::size_t>(w)] == ds[static_cast<std::size_t>(v)] + 1) sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
    return sigma[static_cast<std::size_t>(t)];
  }

  /// Every shortest node path from s to t.
  std::vector<std::vector<std::int32_t>> shortest_paths(std::int32_t s, std::int32_t t) const {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> path{s};
    const auto& dt = dist_[static_cast<std::size_t>(t)];
    auto rec = [&](auto&& self, std::int32_t v) -> void {
      if (v == t) {
        out.push_back(path);
        return;
      }
      for (auto w : adj_[static_cast<std::size_t>(v)])
        if (dt[static_cast<std::size_t>(w)] + 1 == dt[static_cast<std::size_t>(v)]) {
          path.push_back(w);
          self(self, w);
          path.pop_back();
        }
    };
    rec(rec, s);
    return out;
  }

  /// Largest distance between two nodes, in eighths.
  std::int32_t diameter() const {
    std::int32_t best = 0;
    for (const auto& row : dist_)
      for (auto d : row) best = std::max(best, d * step_);
    return best;
  }

 private:
  std::int32_t interior(std::int32_t edge, std::int32_t j) const { return g_.order() + edge * (k_ - 1) + (j - 1); }

  std::vector<std::int32_t> bfs(std::int32_t s) const {
    std::vector<std::int32_t> d(static_cast<std::size_t>(nodes_), -1);
    std::queue<std::int32_t> q;
    d[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto w : adj_[static_cast<std::size_t>(v)])
        if (d[static_cast<std::size_t>(w)] < 0) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
    }
    return d;
  }

  const Graph& g_;
  std::int32_t k_;
  std::int32_t step_;
  std::int32_t nodes_ = 0;
  std::vector<std::vector<std::int32_t>> adj_;
  std::vector<std::vector<std::int32_t>> dist_;
};

/// Naive hyperbolicity constant in eighths over triangles whose corners are
/// nodes at offsets that are multiples of `corner_units`, with every geodesic
/// choice tried separately and sides sampled at every node of the k-subdivision.
inline std::int32_t brute_force_delta(const Graph& g, std::int32_t k, std::int32_t corner_units) {
  const Subdivided s(g, k);
  std::vector<std::int32_t> corners;
  for (std::int32_t v = 0; v < s.size(); ++v) {
    const GraphPoint p = s.point(v);
    if (p.is_vertex() || p.offset % corner_units == 0) corners.push_back(v);
  }
  std::int32_t best = 0;
  auto thinness = [&](const std::vector<std::int32_t>& side, const std::vector<std::int32_t>& o1, const std::vector<std::int32_t>& o2) {
    std::int32_t worst = 0;
    for (auto x : side) {
      std::int32_t near = 1 << 30;
      for (auto y : o1) near = std::min(near, s.dist(x, y));
      for (auto y : o2) near = std::min(near, s.dist(x, y));
      worst = std::max(worst, near);
    }
    return worst;
  };
  for (std::size_t i = 0; i < corners.size(); ++i)
    for (std::size_t j = i; j < corners.size(); ++j)
      for (std::size_t l = j; l < corners.size(); ++l) {
        const auto ab = s.shortest_paths(corners[i], corners[j]);
        const auto bc = s.shortest_paths(corners[j], corners[l]);
        const auto ca = s.shortest_paths(corners[l], corners[i]);
        for (const auto& x : ab)
          for (const auto& y : bc)
            for (const auto& z : ca) {
              best = std::max(best, thinness(x, y, z));
              best = std::max(best, thinness(y, z, x));
              best = std::max(best, thinness(z, x, y));
            }
      }
  return best;
}

}  // namespace oracle
