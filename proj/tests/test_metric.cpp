#include <gtest/gtest.h>

#include "hyp/constructions.hpp"
#include "hyp/enumerate.hpp"
#include "hyp/metric.hpp"
#include "oracles.hpp"

using namespace hyp;

namespace {

Graph cycle(std::int32_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return build_graph(n, e);
}

Graph complete(std::int32_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

}  // namespace

TEST(GraphPoint, Canonicalization) {
  EXPECT_EQ(GraphPoint::on_edge(3, 1, 2), (GraphPoint{1, 3, 6}));
  EXPECT_EQ(GraphPoint::on_edge(1, 3, 0), GraphPoint::vertex(1));
  EXPECT_EQ(GraphPoint::on_edge(1, 3, 8), GraphPoint::vertex(3));
  EXPECT_EQ(GraphPoint::on_edge(3, 1, 8), GraphPoint::vertex(1));
  EXPECT_EQ(to_string(GraphPoint::on_edge(0, 1, 4)), "(0,1)@1/2");
  EXPECT_EQ(to_string(GraphPoint::vertex(5)), "5");
}

TEST(GraphPoint, Validation) {
  const Graph g = cycle(4);
  EXPECT_NO_THROW(validate_point(g, GraphPoint{0, 1, 3}));
  EXPECT_THROW(validate_point(g, GraphPoint{0, 2, 3}), GraphError);
  EXPECT_THROW(validate_point(g, GraphPoint::vertex(4)), GraphError);
}

TEST(VertexDistances, Examples) {
  EXPECT_EQ(vertex_distances(cycle(4))(0, 2), 2);
  const auto d5 = vertex_distances(complete(5));
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = 0; b < 5; ++b) EXPECT_EQ(d5(a, b), a == b ? 0 : 1);
  EXPECT_EQ(vertex_distances(tree_witness(5))(0, 4), 4);
}

TEST(VertexDistances, MetricAxioms) {
  for (const auto& g : connected_graph_classes(6)) {
    const auto d = vertex_distances(g);
    for (Vertex a = 0; a < 6; ++a)
      for (Vertex b = 0; b < 6; ++b) {
        EXPECT_EQ(d(a, b), d(b, a));
        EXPECT_EQ(d(a, b) == 0, a == b);
        for (Vertex c = 0; c < 6; ++c) EXPECT_LE(d(a, c), d(a, b) + d(b, c));
      }
  }
}

TEST(PointDistance, Examples) {
  const Graph c4 = cycle(4);
  const auto d4 = vertex_distances(c4);
  EXPECT_EQ(point_distance(c4, d4, GraphPoint::on_edge(0, 1, 4), GraphPoint::on_edge(2, 3, 4)), EighthLength::edges(2));
  const GraphPoint p{0, 3, 5};
  EXPECT_EQ(point_distance(c4, d4, p, p).units, 0);
  const Graph k4 = complete(4);
  EXPECT_EQ(point_distance(k4, vertex_distances(k4), GraphPoint::on_edge(0, 1, 4), GraphPoint::vertex(2)).units, 12);
}

TEST(PointDistance, SameEdgeUsesDirectRoute) {
  const Graph c3 = cycle(3);
  const auto d = vertex_distances(c3);
  EXPECT_EQ(point_distance(c3, d, GraphPoint{0, 1, 1}, GraphPoint{0, 1, 7}).units, 6);
  const Graph c5 = cycle(5);
  EXPECT_EQ(point_distance(c5, vertex_distances(c5), GraphPoint{0, 1, 1}, GraphPoint{0, 1, 7}).units, 6);
}

TEST(PointDistance, MatchesSubdividedBfsOnAllSmallGraphs) {
  for (std::int32_t n = 3; n <= 5; ++n)
    for (const auto& g : connected_graph_classes(n)) {
      const auto d = vertex_distances(g);
      const oracle::Subdivided s(g, 8);
      for (std::int32_t a = 0; a < s.size(); ++a)
        for (std::int32_t b = 0; b < s.size(); ++b)
          ASSERT_EQ(point_distance(g, d, s.point(a), s.point(b)).units, s.dist(a, b))
              << edge_list_string(g) << to_string(s.point(a)) << " " << to_string(s.point(b));
    }
}

TEST(PointGrid, TableMatchesPointDistance) {
  const Graph g = a_one_witness(6, 9);
  const auto d = vertex_distances(g);
  const PointGrid grid(g, d, 2);
  EXPECT_EQ(grid.size(), static_cast<std::size_t>(6 + 3 * g.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(grid.index_of(grid.points()[i]), static_cast<std::int32_t>(i));
    for (std::size_t j = 0; j < grid.size(); ++j)
      EXPECT_EQ(grid.distance(i, j), point_distance(g, d, grid.points()[i], grid.points()[j]).units);
  }
  EXPECT_EQ(grid.index_of(GraphPoint{0, 1, 3}), -1);
  EXPECT_THROW(PointGrid(g, d, 3), RangeError);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diam_vertices(cycle(6)), EighthLength::edges(3));
  EXPECT_EQ(diam_graph(cycle(6)), EighthLength::edges(3));
  EXPECT_EQ(diam_vertices(cycle(5)), EighthLength::edges(2));
  EXPECT_EQ(diam_graph(cycle(5)).units, 20);
  EXPECT_EQ(diam_graph(complete(4)).units, 16);
  EXPECT_EQ(diam_graph(tree_witness(4)), EighthLength::edges(3));
  EXPECT_EQ(diam_graph(build_graph(1, {})).units, 0);
}

TEST(Diameter, QuarterSamplingIsExact) {
  for (std::int32_t n = 2; n <= 6; ++n)
    for (const auto& g : connected_graph_classes(n)) {
      const oracle::Subdivided s(g, 8);
      const auto diam = diam_graph(g);
      EXPECT_EQ(diam.units, s.diameter()) << edge_list_string(g);
      EXPECT_EQ(diam, diam_graph(g, 1));
      EXPECT_LE(diam_vertices(g), diam);
      EXPECT_LE(diam.units, diam_vertices(g).units + kUnitsPerEdge);
    }
}
