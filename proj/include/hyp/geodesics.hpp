#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/graph.hpp"
#include "hyp/metric.hpp"

namespace hyp {

inline constexpr std::uint64_t kDefaultGeodesicCap = 1'000'000;

/// A geodesic from `start` to `end`. `path` lists the vertices it traverses in
/// order; it is empty only for a direct run along a single edge between two
/// interior points of that edge.
struct Geodesic {
  GraphPoint start;
  GraphPoint end;
  std::vector<Vertex> path;
  EighthLength length;

  Geodesic reversed() const {
    Geodesic r{end, start, {path.rbegin(), path.rend()}, length};
    return r;
  }

  /// start, the path vertices, end; consecutive repeats dropped.
  std::vector<GraphPoint> waypoints() const {
    std::vector<GraphPoint> w;
    w.reserve(path.size() + 2);
    w.push_back(start);
    for (Vertex v : path) {
      const GraphPoint p = GraphPoint::vertex(v);
      if (w.back() != p) w.push_back(p);
    }
    if (w.back() != end) w.push_back(end);
    return w;
  }

  friend bool operator==(const Geodesic&, const Geodesic&) = default;
};

/// Sides are [c0 c1], [c1 c2], [c2 c0].
struct GeodesicTriangle {
  std::array<GraphPoint, 3> corners;
  std::array<Geodesic, 3> sides;
};

namespace detail {

// A straight run along edge (a,b), a < b, from offset `from` to offset `to`.
struct Segment {
  Vertex a;
  Vertex b;
  std::int32_t from;
  std::int32_t to;
};

inline std::int32_t offset_on(Vertex a, Vertex b, const GraphPoint& p) {
  if (p.is_vertex()) return p.u == a ? 0 : (p.u == b ? kUnitsPerEdge : -1);
  return (p.u == a && p.v == b) ? p.offset : -1;
}

inline std::vector<Segment> segments(const Geodesic& geo) {
  const auto w = geo.waypoints();
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const GraphPoint& p = w[i];
    const GraphPoint& q = w[i + 1];
    Vertex a = 0;
    Vertex b = 0;
    if (!p.is_vertex()) {
      a = p.u;
      b = p.v;
    } else if (!q.is_vertex()) {
      a = q.u;
      b = q.v;
    } else {
      a = std::min(p.u, q.u);
      b = std::max(p.u, q.u);
    }
    segs.push_back(Segment{a, b, offset_on(a, b, p), offset_on(a, b, q)});
  }
  return segs;
}

// Number of shortest vertex paths from each vertex to `target`, saturating at cap + 1.
inline std::vector<std::uint64_t> path_counts_to(const Graph& g, const DistanceMatrix& d, Vertex target, std::uint64_t cap) {
  const std::int32_t n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return d(x, target) < d(y, target); });
  std::vector<std::uint64_t> count(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v == target) {
      count[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    std::uint64_t c = 0;
    for (Vertex w : g.neighbors(v))
      if (d(w, target) == d(v, target) - 1) c = std::min(cap + 1, c + count[static_cast<std::size_t>(w)]);
    count[static_cast<std::size_t>(v)] = c;
  }
  return count;
}

inline void collect_paths(const Graph& g, const DistanceMatrix& d, Vertex target, std::vector<Vertex>& prefix,
                          std::vector<std::vector<Vertex>>& out) {
  const Vertex v = prefix.back();
  if (v == target) {
    out.push_back(prefix);
    return;
  }
  for (Vertex w : g.neighbors(v)) {
    if (d(w, target) != d(v, target) - 1) continue;
    prefix.push_back(w);
    collect_paths(g, d, target, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Every geodesic from p to q, deterministic order. Throws CapExceeded when
/// there are more than `cap` of them.
inline std::vector<Geodesic> enumerate_geodesics(const Graph& g, const DistanceMatrix& d, const GraphPoint& p,
                                                 const GraphPoint& q, std::uint64_t cap = kDefaultGeodesicCap) {
  if (cap == 0) throw RangeError("geodesic cap must be positive");
  const EighthLength target = point_distance(g, d, p, q);
  std::vector<Geodesic> out;
  if (p == q) {
    std::vector<Vertex> path;
    if (p.is_vertex()) path.push_back(p.u);
    out.push_back(Geodesic{p, q, std::move(path), EighthLength{0}});
    return out;
  }

  const bool same_edge = !p.is_vertex() && !q.is_vertex() && p.u == q.u && p.v == q.v;
  const bool direct = same_edge && std::abs(p.offset - q.offset) == target.units;

  std::array<std::pair<Vertex, std::int32_t>, 2> ep{};
  std::array<std::pair<Vertex, std::int32_t>, 2> eq{};
  const int np = p.exits(ep);
  const int nq = q.exits(eq);

  std::uint64_t total = direct ? 1 : 0;
  struct Route {
    Vertex from;
    Vertex to;
  };
  std::vector<Route> routes;
  for (int j = 0; j < nq; ++j) {
    std::vector<std::uint64_t> counts;
    for (int i = 0; i < np; ++i) {
      const std::int32_t len = ep[i].second + kUnitsPerEdge * d(ep[i].first, eq[j].first) + eq[j].second;
      if (len != target.units) continue;
      if (counts.empty()) counts = detail::path_counts_to(g, d, eq[j].first, cap);
      total = std::min(cap + 1, total + counts[static_cast<std::size_t>(ep[i].first)]);
      routes.push_back(Route{ep[i].first, eq[j].first});
    }
  }
  if (total > cap) throw CapExceeded(cap);

  if (direct) out.push_back(Geodesic{p, q, {}, target});
  std::sort(routes.begin(), routes.end(), [](const Route& x, const Route& y) {
    return x.from != y.from ? x.from < y.from : x.to < y.to;
  });
  std::set<std::vector<Vertex>> seen;
  for (const Route& r : routes) {
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> prefix{r.from};
    detail::collect_paths(g, d, r.to, prefix, paths);
    for (auto& path : paths) {
      if (!seen.insert(path).second) continue;
      out.push_back(Geodesic{p, q, std::move(path), target});
    }
  }
  return out;
}

/// Points at arc length 0, step, 2*step, ... along the geodesic, endpoint included.
inline std::vector<GraphPoint> sample_side(const Geodesic& side, EighthLength step) {
  if (step.units <= 0) throw RangeError("sample step must be positive");
  std::vector<GraphPoint> out;
  const auto segs = detail::segments(side);
  if (segs.empty()) {
    out.push_back(side.start);
    return out;
  }
  std::size_t seg = 0;
  std::int32_t seg_begin = 0;  // arc length at the start of segs[seg]
  auto point_at = [&](std::int32_t t) {
    while (seg + 1 < segs.size() && t > seg_begin + std::abs(segs[seg].to - segs[seg].from)) {
      seg_begin += std::abs(segs[seg].to - segs[seg].from);
      ++seg;
    }
    const auto& s = segs[seg];
    const std::int32_t dir = s.to >= s.from ? 1 : -1;
    return GraphPoint::on_edge(s.a, s.b, s.from + dir * (t - seg_begin));
  };
  const std::int32_t len = side.length.units;
  for (std::int32_t t = 0; t <= len; t += step.units) out.push_back(point_at(t));
  if (len % step.units != 0) out.push_back(side.end);
  return out;
}

/// Distance from x to a single geodesic. Along one segment the distance is the
/// minimum of an increasing and a decreasing linear function of arc length, so
/// only the segment ends matter unless x lies on the segment itself.
inline EighthLength distance_to_geodesic(const Graph& g, const DistanceMatrix& d, const GraphPoint& x, const Geodesic& side) {
  for (const auto& s : detail::segments(side)) {
    const std::int32_t off = detail::offset_on(s.a, s.b, x);
    if (off >= 0 && off >= std::min(s.from, s.to) && off <= std::max(s.from, s.to)) return EighthLength{0};
  }
  EighthLength best{std::numeric_limits<std::int32_t>::max()};
  for (const auto& w : side.waypoints()) best = std::min(best, point_distance(g, d, x, w));
  return best;
}

/// d(x, union of sides).
inline EighthLength point_to_set_distance(const Graph& g, const DistanceMatrix& d, const GraphPoint& x,
                                          const std::vector<Geodesic>& sides) {
  if (sides.empty()) throw RangeError("point_to_set_distance: empty side list");
  EighthLength best{std::numeric_limits<std::int32_t>::max()};
  for (const auto& s : sides) best = std::min(best, distance_to_geodesic(g, d, x, s));
  return best;
}

/// Structural and metric validity of a geodesic (sampled at 1/8).
inline bool is_valid_geodesic(const Graph& g, const DistanceMatrix& d, const Geodesic& geo) {
  if (geo.length != point_distance(g, d, geo.start, geo.end)) return false;
  for (std::size_t i = 0; i + 1 < geo.path.size(); ++i)
    if (!g.adjacent(geo.path[i], geo.path[i + 1])) return false;
  auto attaches = [&](const GraphPoint& p, Vertex v) {
    return p.is_vertex() ? p.u == v : (p.u == v || p.v == v);
  };
  if (!geo.path.empty() && (!attaches(geo.start, geo.path.front()) || !attaches(geo.end, geo.path.back()))) return false;
  if (geo.path.empty()) {
    if (geo.start.is_vertex() || geo.end.is_vertex() || geo.start.u != geo.end.u || geo.start.v != geo.end.v) return false;
  }
  const auto pts = sample_side(geo, EighthLength{1});
  if (static_cast<std::int32_t>(pts.size()) != geo.length.units + 1) return false;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (point_distance(g, d, geo.start, pts[k]).units != static_cast<std::int32_t>(k)) return false;
  return pts.back() == geo.end;
}

}  // namespace hyp
