#pragma once

#include <string>

#include "json.hpp"

#include "hyp/bounds.hpp"
#include "hyp/decomposition.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/length.hpp"
#include "hyp/random.hpp"

namespace hyp {

using Json = nlohmann::ordered_json;

inline Json to_json(const GraphPoint& p) { return to_string(p); }

inline Json to_json(const Geodesic& geo) {
  Json j;
  j["start"] = to_json(geo.start);
  j["end"] = to_json(geo.end);
  j["path"] = geo.path;
  j["length"] = to_string(geo.length);
  return j;
}

inline Json to_json(const DeltaResult& r) {
  Json j;
  j["delta"] = to_string(r.delta);
  j["delta_quarters"] = r.delta.in_quarters();
  j["mode"] = to_string(r.mode);
  Json corners = Json::array();
  for (const auto& c : r.witness.corners) corners.push_back(to_json(c));
  Json sides = Json::array();
  for (const auto& s : r.witness.sides) sides.push_back(to_json(s));
  j["witness"] = {{"corners", corners}, {"sides", sides}, {"side", r.witness_side}, {"point", to_json(r.witness_point)}};
  return j;
}

inline Json to_json(const BoundsReport& b) {
  Json j;
  j["n"] = b.n;
  j["m"] = b.m;
  j["A"] = quarter_string(b.a_quarters);
  j["b1"] = quarter_string(b.b1_quarters);
  j["b2"] = quarter_string(b.b2_quarters);
  j["A_quarters"] = b.a_quarters;
  j["b1_quarters"] = b.b1_quarters;
  j["b2_quarters"] = b.b2_quarters;
  j["gap"] = quarter_string(b.b2_quarters - b.b1_quarters);
  j["gap_bound"] = b.gap_bound;
  j["r_star"] = b.r_star ? Json(*b.r_star) : Json(nullptr);
  j["n0"] = b.n0 ? Json(*b.n0) : Json(nullptr);
  return j;
}

inline Json to_json(const TDecomposition& t) {
  Json j;
  j["cut_vertices"] = t.cut_vertices;
  j["blocks"] = t.blocks;
  return j;
}

inline Json to_json(const ExperimentStats& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["rng"] = s.rng;
  j["A"] = quarter_string(s.a_quarters);
  j["b2"] = quarter_string(s.b2_quarters);
  j["delta_min"] = quarter_string(s.delta_min_quarters);
  j["delta_max"] = quarter_string(s.delta_max_quarters);
  j["delta_mean"] = rational_string(s.delta_sum_quarters, 4 * static_cast<std::int64_t>(s.trials));
  j["delta_min_quarters"] = s.delta_min_quarters;
  j["delta_max_quarters"] = s.delta_max_quarters;
  j["violations"] = s.violations;
  Json hist = Json::object();
  for (const auto& [q, count] : s.histogram) hist[quarter_string(q)] = count;
  j["histogram"] = hist;
  return j;
}

}  // namespace hyp
