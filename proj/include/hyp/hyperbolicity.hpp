#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hyp/decomposition.hpp"
#include "hyp/errors.hpp"
#include "hyp/geodesics.hpp"
#include "hyp/graph.hpp"
#include "hyp/metric.hpp"
#include "hyp/parallel.hpp"

namespace hyp {

/// Standard: corners at vertices and edge midpoints, sides sampled every 1/4.
/// Fine: corners every 1/4 along edges, sides sampled every 1/8.
enum class Mode { Standard, Fine };

inline const char* to_string(Mode m) { return m == Mode::Standard ? "standard" : "fine"; }

struct DeltaOptions {
  Mode mode = Mode::Standard;
  std::uint64_t geodesic_cap = kDefaultGeodesicCap;
  unsigned jobs = 1;
};

struct DeltaResult {
  EighthLength delta;
  GeodesicTriangle witness;
  int witness_side = 0;  // index into witness.sides holding `witness_point`
  GraphPoint witness_point;
  Mode mode = Mode::Standard;
};

enum class SubOneClass { IsTree, DeltaThreeQuarters, AtLeastOne };

inline const char* to_string(SubOneClass c) {
  switch (c) {
    case SubOneClass::IsTree: return "is_tree";
    case SubOneClass::DeltaThreeQuarters: return "delta_three_quarters";
    case SubOneClass::AtLeastOne: return "at_least_one";
  }
  return "?";
}

namespace detail {

struct PairGeodesics {
  std::vector<Geodesic> geodesics;                   // oriented from the lower corner to the higher
  std::vector<std::vector<std::int32_t>> samples;    // grid indices along each geodesic
  std::vector<std::int16_t> farthest;                // per grid point: max over geodesics of d(x, geodesic)
};

struct Candidate {
  std::int32_t value = -1;
  std::int32_t a = 0, b = 0, c = 0;
  int side = 0;
  std::int32_t geodesic = 0;
  std::int32_t sample = 0;
};

inline GeodesicTriangle degenerate_triangle(const GraphPoint& p) {
  std::vector<Vertex> path;
  if (p.is_vertex()) path.push_back(p.u);
  const Geodesic g{p, p, path, EighthLength{0}};
  return GeodesicTriangle{{p, p, p}, {g, g, g}};
}

}  // namespace detail

/// Sharp thin-triangle constant of g, with a witnessing triangle and point.
///
/// For a fixed side and a point x on it the other two sides are chosen
/// independently, so the worst choice gives min(F_j(x), F_k(x)) where F is the
/// largest distance from x to any geodesic of that corner pair. Tabulating F
/// per corner pair removes the cross product over side choices.
///
/// The witness is the first maximizer in the order: corner triple (a <= b <= c
/// by corner index; vertices first, then edge points in edge order), side
/// [ab], [bc], [ca], geodesic enumeration order, arc length along the side.
inline DeltaResult delta_exact(const Graph& g, const DeltaOptions& opt = {}) {
  const DistanceMatrix d = vertex_distances(g);
  const std::int32_t step = opt.mode == Mode::Standard ? 2 : 1;
  const std::int32_t corner_step = opt.mode == Mode::Standard ? 4 : 2;
  const PointGrid grid(g, d, step);

  std::vector<GraphPoint> corners;
  for (Vertex v = 0; v < g.order(); ++v) corners.push_back(GraphPoint::vertex(v));
  for (auto [u, v] : g.edges())
    for (std::int32_t off = corner_step; off < kUnitsPerEdge; off += corner_step) corners.push_back(GraphPoint{u, v, off});
  const auto nc = static_cast<std::int32_t>(corners.size());
  const std::size_t np = grid.size();

  // pair (i <= j) -> slot
  auto slot = [nc](std::int32_t i, std::int32_t j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(nc) - static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 +
           static_cast<std::size_t>(j - i);
  };
  const std::size_t pair_count = static_cast<std::size_t>(nc) * static_cast<std::size_t>(nc + 1) / 2;
  std::vector<detail::PairGeodesics> pairs(pair_count);

  parallel_for(static_cast<std::size_t>(nc), opt.jobs, [&](std::size_t ii) {
    const auto i = static_cast<std::int32_t>(ii);
    std::vector<char> on_side(np, 0);
    for (std::int32_t j = i; j < nc; ++j) {
      auto& pg = pairs[slot(i, j)];
      pg.geodesics = enumerate_geodesics(g, d, corners[static_cast<std::size_t>(i)], corners[static_cast<std::size_t>(j)], opt.geodesic_cap);
      pg.farthest.assign(np, 0);
      pg.samples.reserve(pg.geodesics.size());
      for (const auto& geo : pg.geodesics) {
        std::vector<std::int32_t> idx;
        for (const auto& pt : sample_side(geo, EighthLength{step})) idx.push_back(grid.index_of(pt));
        std::vector<std::int32_t> way;
        for (const auto& pt : geo.waypoints()) way.push_back(grid.index_of(pt));
        for (auto k : idx) on_side[static_cast<std::size_t>(k)] = 1;
        for (std::size_t x = 0; x < np; ++x) {
          std::int32_t dist = 0;
          if (!on_side[x]) {
            const std::int32_t* row = grid.row(x);
            dist = std::numeric_limits<std::int32_t>::max();
            for (auto w : way) dist = std::min(dist, row[w]);
          }
          if (dist > pg.farthest[x]) pg.farthest[x] = static_cast<std::int16_t>(dist);
        }
        for (auto k : idx) on_side[static_cast<std::size_t>(k)] = 0;
        pg.samples.push_back(std::move(idx));
      }
    }
  });

  std::vector<detail::Candidate> per_a(static_cast<std::size_t>(nc));
  parallel_for(static_cast<std::size_t>(nc), opt.jobs, [&](std::size_t aa) {
    const auto a = static_cast<std::int32_t>(aa);
    detail::Candidate best;
    for (std::int32_t b = a; b < nc; ++b) {
      const auto& ab = pairs[slot(a, b)];
      for (std::int32_t c = b; c < nc; ++c) {
        const auto& bc = pairs[slot(b, c)];
        const auto& ac = pairs[slot(a, c)];
        const std::array<const detail::PairGeodesics*, 3> side{&ab, &bc, &ac};
        const std::array<std::array<const detail::PairGeodesics*, 2>, 3> other{{{&bc, &ac}, {&ab, &ac}, {&ab, &bc}}};
        for (int s = 0; s < 3; ++s) {
          const auto& f1 = other[static_cast<std::size_t>(s)][0]->farthest;
          const auto& f2 = other[static_cast<std::size_t>(s)][1]->farthest;
          const auto& samples = side[static_cast<std::size_t>(s)]->samples;
          for (std::size_t gi = 0; gi < samples.size(); ++gi) {
            const auto& sm = samples[gi];
            const auto len = static_cast<std::int32_t>(sm.size());
            for (std::int32_t k = 0; k < len; ++k) {
              // side [ca] runs against the stored a->c orientation
              const auto x = static_cast<std::size_t>(sm[static_cast<std::size_t>(s == 2 ? len - 1 - k : k)]);
              const std::int32_t v = std::min(f1[x], f2[x]);
              if (v > best.value) best = detail::Candidate{v, a, b, c, s, static_cast<std::int32_t>(gi), k};
            }
          }
        }
      }
    }
    per_a[aa] = best;
  });

  detail::Candidate best;
  for (const auto& cand : per_a)
    if (cand.value > best.value) best = cand;

  DeltaResult out;
  out.mode = opt.mode;
  out.delta = EighthLength{std::max(best.value, 0)};
  if (!out.delta.on_quarter_grid())
    throw GridViolation("hyperbolicity value " + to_string(out.delta) + " is not a multiple of 1/4");

  const std::array<std::int32_t, 3> ci{best.a, best.b, best.c};
  auto side_geodesics = [&](int s) {
    const std::int32_t p = ci[static_cast<std::size_t>(s)];
    const std::int32_t q = ci[static_cast<std::size_t>((s + 1) % 3)];
    const auto& pg = pairs[slot(p, q)];
    std::vector<Geodesic> out_geos = pg.geodesics;
    if (p > q || (p == q && s == 2)) {
      for (auto& geo : out_geos) geo = geo.reversed();
    }
    return out_geos;
  };
  GeodesicTriangle tri;
  for (int s = 0; s < 3; ++s) tri.corners[static_cast<std::size_t>(s)] = corners[static_cast<std::size_t>(ci[static_cast<std::size_t>(s)])];
  const auto chosen = side_geodesics(best.side);
  tri.sides[static_cast<std::size_t>(best.side)] = chosen[static_cast<std::size_t>(best.geodesic)];
  const auto samples = sample_side(tri.sides[static_cast<std::size_t>(best.side)], EighthLength{step});
  out.witness_point = samples[static_cast<std::size_t>(best.sample)];
  const std::int32_t wx = grid.index_of(out.witness_point);
  for (int s = 0; s < 3; ++s) {
    if (s == best.side) continue;
    const auto geos = side_geodesics(s);
    const auto& far = pairs[slot(ci[static_cast<std::size_t>(s)], ci[static_cast<std::size_t>((s + 1) % 3)])];
    // first geodesic realizing the tabulated farthest distance
    std::size_t pick = 0;
    for (std::size_t k = 0; k < geos.size(); ++k) {
      if (distance_to_geodesic(g, d, out.witness_point, geos[k]).units == far.farthest[static_cast<std::size_t>(wx)]) {
        pick = k;
        break;
      }
    }
    tri.sides[static_cast<std::size_t>(s)] = geos[pick];
  }
  out.witness = std::move(tri);
  out.witness_side = best.side;
  return out;
}

/// The witness point lies on its side and sits exactly delta away from the
/// union of the other two sides.
inline bool witness_holds(const Graph& g, const DeltaResult& r) {
  const DistanceMatrix d = vertex_distances(g);
  const auto& tri = r.witness;
  for (int s = 0; s < 3; ++s) {
    const auto& side = tri.sides[static_cast<std::size_t>(s)];
    if (side.start != tri.corners[static_cast<std::size_t>(s)] || side.end != tri.corners[static_cast<std::size_t>((s + 1) % 3)])
      return false;
    if (!is_valid_geodesic(g, d, side)) return false;
  }
  const auto& own = tri.sides[static_cast<std::size_t>(r.witness_side)];
  if (distance_to_geodesic(g, d, r.witness_point, own).units != 0) return false;
  std::vector<Geodesic> others;
  for (int s = 0; s < 3; ++s)
    if (s != r.witness_side) others.push_back(tri.sides[static_cast<std::size_t>(s)]);
  return point_to_set_distance(g, d, r.witness_point, others) == r.delta;
}

namespace detail {

inline GraphPoint lift(const GraphPoint& p, const std::vector<Vertex>& labels) {
  return GraphPoint{labels[static_cast<std::size_t>(p.u)], labels[static_cast<std::size_t>(p.v)], p.offset};
}

inline Geodesic lift(const Geodesic& geo, const std::vector<Vertex>& labels) {
  Geodesic out{lift(geo.start, labels), lift(geo.end, labels), {}, geo.length};
  for (Vertex v : geo.path) out.path.push_back(labels[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace detail

/// Maximum of delta_exact over the blocks of the canonical T-decomposition.
/// Bridges contribute 0; ties keep the first block in sorted order.
inline DeltaResult delta_via_blocks(const Graph& g, const DeltaOptions& opt = {}) {
  DeltaResult best;
  best.mode = opt.mode;
  best.witness = detail::degenerate_triangle(GraphPoint::vertex(0));
  best.witness_point = GraphPoint::vertex(0);
  bool have = false;
  for (const auto& block : canonical_t_decomposition(g).blocks) {
    if (block.size() < 3) continue;
    const DeltaResult r = delta_exact(induced_subgraph(g, block), opt);
    if (have && r.delta <= best.delta) continue;
    have = true;
    best.delta = r.delta;
    best.witness_side = r.witness_side;
    best.witness_point = detail::lift(r.witness_point, block);
    for (std::size_t s = 0; s < 3; ++s) {
      best.witness.corners[s] = detail::lift(r.witness.corners[s], block);
      best.witness.sides[s] = detail::lift(r.witness.sides[s], block);
    }
  }
  return best;
}

/// Bucket of delta below 1: 0 for trees, 3/4 when every block is an edge or a
/// triangle, otherwise delta >= 1.
inline SubOneClass classify_sub_one(const Graph& g) {
  if (g.is_tree()) return SubOneClass::IsTree;
  for (const auto& b : canonical_t_decomposition(g).blocks) {
    if (b.size() > 3) return SubOneClass::AtLeastOne;
  }
  return SubOneClass::DeltaThreeQuarters;
}

}  // namespace hyp
