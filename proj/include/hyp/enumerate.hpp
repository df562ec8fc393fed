#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyp/graph.hpp"

namespace hyp {

// Small graphs (n <= 11) as bitmasks over vertex pairs u < v, bit index
// u*n - u(u+1)/2 + (v-u-1).
using EdgeMask = std::uint64_t;

constexpr std::int32_t pair_bit(std::int32_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::vector<Edge> mask_edges(std::int32_t n, EdgeMask mask) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (mask >> pair_bit(n, u, v) & 1U) edges.emplace_back(u, v);
  return edges;
}

inline bool mask_connected(std::int32_t n, EdgeMask mask) {
  std::vector<std::int32_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::int32_t comps = n;
  for (auto [u, v] : mask_edges(n, mask)) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps == 1;
}

/// Calls fn(graph) for every connected labeled graph on n vertices with m edges.
template <class Fn>
void for_each_connected_labeled_graph(std::int32_t n, std::int32_t m, Fn&& fn) {
  const std::int32_t pairs = n * (n - 1) / 2;
  if (n > 11) throw std::invalid_argument("labeled enumeration is limited to n <= 11");
  if (m < 0 || m > pairs) return;
  std::vector<char> pick(static_cast<std::size_t>(pairs), 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  do {
    EdgeMask mask = 0;
    for (std::int32_t i = 0; i < pairs; ++i)
      if (pick[static_cast<std::size_t>(i)]) mask |= EdgeMask{1} << i;
    if (mask_connected(n, mask)) fn(build_graph(n, mask_edges(n, mask)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Isomorphism-invariant code: the smallest mask over relabelings that order
/// vertices by (degree, sorted neighbour degrees). Only relabelings within a
/// class of equal invariants are tried.
inline EdgeMask canonical_mask(std::int32_t n, EdgeMask mask) {
  std::vector<std::int32_t> deg(static_cast<std::size_t>(n), 0);
  const auto edges = mask_edges(n, mask);
  for (auto [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::vector<std::vector<std::int32_t>> inv(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) inv[static_cast<std::size_t>(v)].push_back(deg[static_cast<std::size_t>(v)]);
  for (auto [u, v] : edges) {
    inv[static_cast<std::size_t>(u)].push_back(deg[static_cast<std::size_t>(v)]);
    inv[static_cast<std::size_t>(v)].push_back(deg[static_cast<std::size_t>(u)]);
  }
  for (auto& x : inv) std::sort(x.begin() + 1, x.end());

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return inv[static_cast<std::size_t>(a)] != inv[static_cast<std::size_t>(b)] ? inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)]
                                                                                : a < b;
  });
  // cell boundaries in `order`
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && inv[static_cast<std::size_t>(order[j])] == inv[static_cast<std::size_t>(order[i])]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  EdgeMask best = ~EdgeMask{0};
  std::vector<Vertex> position(static_cast<std::size_t>(n));
  auto evaluate = [&] {
    for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    EdgeMask out = 0;
    for (auto [u, v] : edges) out |= EdgeMask{1} << pair_bit(n, position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
    best = std::min(best, out);
  };
  // odometer over per-cell permutations
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

/// One representative per isomorphism class of connected graphs on n vertices,
/// sorted by edge count and then canonical code.
inline std::vector<Graph> connected_graph_classes(std::int32_t n) {
  if (n < 1 || n > 8) throw std::invalid_argument("class enumeration is limited to 1 <= n <= 8");
  const std::int32_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  std::set<EdgeMask> level{0};
  for (std::int32_t m = 0; m <= pairs; ++m) {
    for (EdgeMask code : level)
      if (mask_connected(n, code)) out.push_back(build_graph(n, mask_edges(n, code)));
    std::set<EdgeMask> next;
    for (EdgeMask code : level)
      for (std::int32_t b = 0; b < pairs; ++b)
        if (!(code >> b & 1U)) next.insert(canonical_mask(n, code | EdgeMask{1} << b));
    level = std::move(next);
  }
  return out;
}

}  // namespace hyp
