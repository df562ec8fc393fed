#include <gtest/gtest.h>

#include "hyp/verify.hpp"

using namespace hyp;

TEST(LongestCycle, Examples) {
  EXPECT_EQ(longest_cycle(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})), 0);
  EXPECT_EQ(longest_cycle(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})), 3);
  EXPECT_EQ(longest_cycle(build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})), 3);
  EXPECT_EQ(longest_cycle(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})), 4);
  std::vector<Edge> k6;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
  EXPECT_EQ(longest_cycle(build_graph(6, k6)), 6);
}

TEST(CliqueRemovalSpecs, Enumeration) {
  // n = 4: {2}, {2,2}, {3}
  EXPECT_EQ(all_clique_removal_specs(4).size(), 3U);
  for (std::int32_t n = 3; n <= 8; ++n)
    for (const auto& spec : all_clique_removal_specs(n)) {
      EXPECT_NO_THROW(validate_spec(spec));
      EXPECT_TRUE(std::is_sorted(spec.parts.rbegin(), spec.parts.rend()));
    }
}

TEST(Verifier, ReducedRunPasses) {
  VerifyOptions opt;
  opt.max_n = 5;
  Verifier v(opt);
  for (const auto& r : v.run_all()) EXPECT_TRUE(r.passed) << r.id << " " << r.title << ": " << r.detail;
  EXPECT_GT(v.corpus_size(), 0U);
}

TEST(Verifier, UnknownCriterion) {
  Verifier v;
  EXPECT_THROW(v.run(12), RangeError);
}
