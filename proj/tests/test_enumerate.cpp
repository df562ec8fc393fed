#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hyp/enumerate.hpp"
#include "hyp/random.hpp"

using namespace hyp;

TEST(Enumerate, LabeledConnectedCounts) {
  // connected labeled graphs on 4 and 5 vertices
  std::int64_t four = 0;
  for (std::int32_t m = 0; m <= 6; ++m) for_each_connected_labeled_graph(4, m, [&](const Graph&) { ++four; });
  EXPECT_EQ(four, 38);
  std::int64_t five = 0;
  for (std::int32_t m = 0; m <= 10; ++m) for_each_connected_labeled_graph(5, m, [&](const Graph&) { ++five; });
  EXPECT_EQ(five, 728);
  std::int64_t trees = 0;
  for_each_connected_labeled_graph(6, 5, [&](const Graph&) { ++trees; });
  EXPECT_EQ(trees, 1296);
}

TEST(Enumerate, UnlabeledConnectedCounts) {
  const std::vector<std::size_t> want = {1, 1, 2, 6, 21, 112, 853};
  for (std::int32_t n = 1; n <= 7; ++n) EXPECT_EQ(connected_graph_classes(n).size(), want[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Enumerate, CanonicalMaskIgnoresLabels) {
  Rng rng = trial_rng(3, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph_r_prime(7, 7 + trial % 10, rng);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
    EdgeMask a = 0;
    EdgeMask b = 0;
    for (auto [u, v] : g.edges()) {
      a |= EdgeMask{1} << pair_bit(7, u, v);
      b |= EdgeMask{1} << pair_bit(7, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    EXPECT_EQ(canonical_mask(7, a), canonical_mask(7, b));
  }
}

TEST(Enumerate, CanonicalMaskSeparatesClasses) {
  const auto classes = connected_graph_classes(6);
  std::set<EdgeMask> codes;
  for (const auto& g : classes) {
    EdgeMask mask = 0;
    for (auto [u, v] : g.edges()) mask |= EdgeMask{1} << pair_bit(6, u, v);
    codes.insert(canonical_mask(6, mask));
  }
  EXPECT_EQ(codes.size(), classes.size());
}
