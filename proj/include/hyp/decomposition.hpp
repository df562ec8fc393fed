#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyp/graph.hpp"
#include "hyp/length.hpp"
#include "hyp/metric.hpp"

namespace hyp {

/// Cover of the graph by subgraphs meeting pairwise in at most one cut vertex.
/// Each block is a sorted vertex set; its subgraph is the induced one.
struct TDecomposition {
  enum class Kind { Canonical, Edge };

  std::vector<std::vector<Vertex>> blocks;  // sorted lexicographically
  std::vector<Vertex> cut_vertices;         // sorted
  Kind kind = Kind::Canonical;
};

struct EffectiveDiameters {
  std::int32_t diameff_v = 0;  // whole edge units
  EighthLength diameff_g;
};

struct Gamma3Result {
  bool in_gamma3 = false;
  std::optional<std::int32_t> k;  // number of triangles when in_gamma3
};

namespace detail {

struct BlockScan {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};

// Low-link DFS with an edge stack; iterative so deep paths are fine.
inline BlockScan scan_blocks(const Graph& g) {
  const std::int32_t n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int32_t> disc(un, -1);
  std::vector<std::int32_t> low(un, 0);
  std::vector<char> is_cut(un, 0);
  std::vector<Edge> edge_stack;
  BlockScan out;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::int32_t children;
  };
  std::int32_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        const auto uw = static_cast<std::size_t>(w);
        if (disc[uw] < 0) {
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          disc[uw] = low[uw] = timer++;
          stack.push_back(Frame{w, f.v, 0, 0});
        } else if (w != f.parent && disc[uw] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[uw]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[static_cast<std::size_t>(done.v)] = 1;
        continue;
      }
      const Vertex p = stack.back().v;
      const auto up = static_cast<std::size_t>(p);
      low[up] = std::min(low[up], low[static_cast<std::size_t>(done.v)]);
      if (low[static_cast<std::size_t>(done.v)] >= disc[up]) {
        if (stack.size() > 1) is_cut[up] = 1;
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == done.v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
  return out;
}

}  // namespace detail

inline std::vector<Vertex> cut_vertices(const Graph& g) { return detail::scan_blocks(g).cut_vertices; }

/// Maximal two-connected subgraphs (bridges count as blocks).
inline TDecomposition canonical_t_decomposition(const Graph& g) {
  auto scan = detail::scan_blocks(g);
  return TDecomposition{std::move(scan.blocks), std::move(scan.cut_vertices), TDecomposition::Kind::Canonical};
}

/// Cut edges as their own components, the rest split into pieces free of cut
/// edges and meeting only at cut vertices. Computed without the low-link scan:
/// two edges at a common vertex v share a component iff their far ends stay
/// connected once v is removed.
inline TDecomposition t_edge_decomposition(const Graph& g) {
  const std::int32_t n = g.order();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::int32_t> comp(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    // components of G - v
    std::fill(comp.begin(), comp.end(), -1);
    std::int32_t label = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (s == v || comp[static_cast<std::size_t>(s)] >= 0) continue;
      comp[static_cast<std::size_t>(s)] = label;
      stack.assign(1, s);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (y == v || comp[static_cast<std::size_t>(y)] >= 0) continue;
          comp[static_cast<std::size_t>(y)] = label;
          stack.push_back(y);
        }
      }
      ++label;
    }
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (comp[static_cast<std::size_t>(nb[i])] != comp[static_cast<std::size_t>(nb[j])]) continue;
        const auto e1 = static_cast<std::size_t>(g.edge_index(v, nb[i]));
        const auto e2 = static_cast<std::size_t>(g.edge_index(v, nb[j]));
        parent[find(e1)] = find(e2);
      }
    }
  }

  std::vector<std::vector<Vertex>> groups(m);
  for (std::size_t e = 0; e < m; ++e) {
    auto& grp = groups[find(e)];
    grp.push_back(edges[e].first);
    grp.push_back(edges[e].second);
  }
  TDecomposition out;
  out.kind = TDecomposition::Kind::Edge;
  std::vector<std::int32_t> membership(static_cast<std::size_t>(n), 0);
  for (auto& grp : groups) {
    if (grp.empty()) continue;
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
    for (Vertex v : grp) ++membership[static_cast<std::size_t>(v)];
    out.blocks.push_back(std::move(grp));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v)
    if (membership[static_cast<std::size_t>(v)] > 1) out.cut_vertices.push_back(v);
  return out;
}

/// Edges of g whose endpoints both lie in the sorted vertex set.
inline std::int32_t induced_edge_count(const Graph& g, const std::vector<Vertex>& block) {
  std::int32_t count = 0;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j) count += g.adjacent(block[i], block[j]) ? 1 : 0;
  return count;
}

inline EffectiveDiameters effective_diameters(const Graph& g) {
  EffectiveDiameters out;
  for (const auto& block : canonical_t_decomposition(g).blocks) {
    const Graph sub = induced_subgraph(g, block);
    const DistanceMatrix d = vertex_distances(sub);
    out.diameff_v = std::max(out.diameff_v, diam_vertices(sub, d).units / kUnitsPerEdge);
    out.diameff_g = std::max(out.diameff_g, diam_graph(sub, d));
  }
  return out;
}

/// Membership in the class of graphs whose every block is a triangle.
inline Gamma3Result gamma3_check(const Graph& g) {
  const auto dec = canonical_t_decomposition(g);
  if (dec.blocks.empty()) return {};
  for (const auto& b : dec.blocks)
    if (b.size() != 3 || induced_edge_count(g, b) != 3) return {};
  const auto k = static_cast<std::int32_t>(dec.blocks.size());
  if (g.order() != 2 * k + 1 || g.size() != 3 * k)
    throw std::logic_error("triangle cactus with " + std::to_string(k) + " triangles has n=" + std::to_string(g.order()) +
                           ", m=" + std::to_string(g.size()));
  return Gamma3Result{true, k};
}

}  // namespace hyp
