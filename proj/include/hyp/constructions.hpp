#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyp/bounds.hpp"
#include "hyp/errors.hpp"
#include "hyp/graph.hpp"

namespace hyp {

/// K_n minus all edges inside disjoint vertex groups of the given sizes.
struct CliqueRemovalSpec {
  std::int32_t n = 0;
  std::vector<std::int32_t> parts;
};

/// Parts t_i >= 2 with sum t_i <= t + 2 and sum C(t_i, 2) = t.
struct DeficitPartition {
  std::int64_t t = 0;
  std::vector<std::int32_t> parts;
};

namespace detail {

// Path n_from, n_from+1, ..., n-1 hanging off `hub`.
inline void append_tail(std::vector<Edge>& edges, Vertex hub, Vertex first, std::int32_t n) {
  Vertex prev = hub;
  for (Vertex v = first; v < n; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
}

}  // namespace detail

inline Graph tree_witness(std::int32_t n) {
  if (n < 1) throw RangeError("tree_witness needs n >= 1");
  std::vector<Edge> edges;
  detail::append_tail(edges, 0, 1, n);
  return build_graph(n, std::move(edges));
}

/// k = m+1-n triangles and 3n-3-2m pendant edges sharing vertex 0.
inline Graph triangle_cactus(std::int32_t n, std::int32_t m) {
  if (m < n || 2 * m > 3 * n - 3)
    throw RangeError("triangle_cactus needs n <= m and 2m <= 3n-3, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  const std::int32_t k = m + 1 - n;
  const std::int32_t pendants = 3 * n - 3 - 2 * m;
  std::vector<Edge> edges;
  for (std::int32_t i = 0; i < k; ++i) {
    const Vertex a = 2 * i + 1;
    const Vertex b = 2 * i + 2;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  for (std::int32_t j = 0; j < pendants; ++j) edges.emplace_back(0, 2 * k + 1 + j);
  return build_graph(n, std::move(edges));
}

inline void validate_spec(const CliqueRemovalSpec& spec) {
  if (spec.parts.empty()) throw SpecError("clique removal needs at least one part");
  std::int64_t sum = 0;
  for (auto p : spec.parts) {
    if (p < 2) throw SpecError("part size " + std::to_string(p) + " < 2");
    if (p >= spec.n) throw SpecError("part size " + std::to_string(p) + " >= n = " + std::to_string(spec.n));
    sum += p;
  }
  if (sum > spec.n) throw SpecError("part sizes sum to " + std::to_string(sum) + " > n = " + std::to_string(spec.n));
}

/// Groups are consecutive label blocks starting at vertex 0.
inline Graph kn_minus_cliques(const CliqueRemovalSpec& spec) {
  validate_spec(spec);
  std::vector<std::int32_t> group(static_cast<std::size_t>(spec.n), -1);
  Vertex next = 0;
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    for (std::int32_t j = 0; j < spec.parts[i]; ++j) group[static_cast<std::size_t>(next++)] = static_cast<std::int32_t>(i);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v)
      if (group[static_cast<std::size_t>(u)] < 0 || group[static_cast<std::size_t>(u)] != group[static_cast<std::size_t>(v)])
        edges.emplace_back(u, v);
  return build_graph(spec.n, std::move(edges));
}

inline DeficitPartition deficit_partition(std::int64_t t) {
  if (t < 1) throw RangeError("deficit_partition needs t >= 1, got " + std::to_string(t));
  static const std::vector<std::vector<std::int32_t>> base = {
      {}, {2}, {2, 2}, {3}, {3, 2}, {3, 2, 2}, {4}, {4, 2}, {4, 2, 2}, {4, 3},
  };
  DeficitPartition out{t, {}};
  std::int64_t rest = t;
  std::int64_t threes = 0;
  while (rest > 9) {
    rest -= 3;
    ++threes;
  }
  out.parts = base[static_cast<std::size_t>(rest)];
  out.parts.insert(out.parts.end(), static_cast<std::size_t>(threes), 3);
  return out;
}

/// A graph in G(n,m) with hyperbolicity constant exactly 1, for m >= n and
/// 2m > 3n-3. The m = n+1 shape exists for every n >= 4 and is accepted there too.
inline Graph a_one_witness(std::int32_t n, std::int32_t m) {
  const bool short_form = n >= 4 && m == n + 1;
  if (!short_form && (m < n || 2 * m <= 3 * n - 3 || m > choose2(n)))
    throw RangeError("a_one_witness needs n <= m <= C(n,2) and 2m > 3n-3 (or m = n+1, n >= 4), got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
  std::vector<Edge> edges;
  if (m == choose2(n)) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, std::move(edges));
  }
  if (m == n + 1) {
    // K4 minus the edge {2,3}, with the tail on vertex 0
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    detail::append_tail(edges, 0, 4, n);
    return build_graph(n, std::move(edges));
  }
  // largest j in [4, n-1] with m - C(j,2) >= n - j
  std::int32_t j = 4;
  for (std::int32_t c = 4; c <= n - 1; ++c)
    if (m - choose2(c) >= n - c) j = c;
  const std::int32_t core = j + 1;
  const std::int64_t deficit = choose2(core) + n - core - m;
  const auto part = deficit_partition(deficit);
  const Graph g1 = kn_minus_cliques(CliqueRemovalSpec{core, part.parts});
  edges = g1.edges();
  detail::append_tail(edges, 0, core, n);
  return build_graph(n, std::move(edges));
}

/// Cycle 0..n-1 plus m-n chords among the first n0 vertices.
///
/// Chords [v1,vi] and [vi,vn0] with i = ceil(n0/2) go first so that some vi is
/// adjacent to both ends of the clique path; the rest follow in lexicographic
/// order. With a single chord and n0 >= 5 both cannot be placed, and plain
/// lexicographic order is used instead (its first chord, {0,2}, makes vertex 1
/// a common neighbour of vertices 0 and 2).
inline Graph cycle_clique_witness(std::int32_t n, std::int32_t n0, std::int32_t m) {
  if (n0 < 3 || n0 > n || m <= n || m > n + choose2(n0 - 1) || m > choose2(n))
    throw RangeError("cycle_clique_witness needs 3 <= n0 <= n and n < m <= min(n + C(n0-1,2), C(n,2)), got n=" + std::to_string(n) +
                     ", n0=" + std::to_string(n0) + ", m=" + std::to_string(m));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  auto on_cycle = [n](Vertex a, Vertex b) { return b - a == 1 || (a == 0 && b == n - 1); };

  std::vector<Edge> forced;
  const Vertex mid = (n0 + 1) / 2 - 1;  // v_i with i = ceil(n0/2), zero-based
  if (!on_cycle(0, mid)) forced.emplace_back(0, mid);
  if (!on_cycle(mid, n0 - 1)) forced.emplace_back(mid, n0 - 1);
  const std::int32_t extra = m - n;
  std::vector<Edge> chords;
  if (static_cast<std::int32_t>(forced.size()) <= extra) chords = forced;
  for (Vertex a = 0; a < n0; ++a)
    for (Vertex b = a + 1; b < n0; ++b)
      if (!on_cycle(a, b) && std::find(chords.begin(), chords.end(), Edge{a, b}) == chords.end()) chords.emplace_back(a, b);
  chords.resize(static_cast<std::size_t>(extra));
  edges.insert(edges.end(), chords.begin(), chords.end());
  return build_graph(n, std::move(edges));
}

}  // namespace hyp
