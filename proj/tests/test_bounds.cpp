#include <gtest/gtest.h>

#include <cmath>

#include "hyp/bounds.hpp"

using namespace hyp;

namespace {

// Linear-scan versions of the two bounds.
std::int64_t b2_scan(std::int64_t n, std::int64_t m) {
  if (m == n - 1) return 0;
  if (n >= 3 && m <= n + 3) return n;
  for (std::int64_t r = 2; 2 * r <= n; ++r)
    if (m > choose2(n) - delta_r_closed(n, r)) return 2 * r;
  return n;
}

std::int64_t b1_scan(std::int64_t n, std::int64_t m) {
  if (m == n - 1) return 0;
  if (m <= n + 3) return n;
  for (std::int64_t j = 5;; ++j)
    if (m <= n + choose2(j - 1)) return n - j + 3;
}

}  // namespace

TEST(LayerProfile, Evaluation) {
  EXPECT_EQ(f_r_eval(LayerProfile{{1, 2, 4, 1}}), 7);
  for (std::int64_t n = 4; n <= 9; ++n) EXPECT_EQ(f_r_eval(LayerProfile{{1, n - 2, 1}}), 1);
  EXPECT_EQ(f_r_eval(LayerProfile{{1, 2, 2, 2, 1}}), 13);
  EXPECT_EQ((LayerProfile{{1, 2, 2, 2, 1}}).r(), 4);
  EXPECT_EQ((LayerProfile{{1, 2, 2, 2, 1}}).n(), 8);
}

TEST(LayerProfile, Validation) {
  EXPECT_THROW(f_r_eval(LayerProfile{{1, 2}}), InvalidProfile);
  EXPECT_THROW(f_r_eval(LayerProfile{{2, 2, 1}}), InvalidProfile);
  EXPECT_THROW(f_r_eval(LayerProfile{{1, 1, 2, 1}}), InvalidProfile);
  EXPECT_THROW(f_r_eval(LayerProfile{{1, 2, 2, 0}}), InvalidProfile);
}

TEST(DeltaR, ClosedFormExamples) {
  EXPECT_EQ(delta_r_closed(10, 2), 1);
  EXPECT_EQ(delta_r_closed(10, 3), 9);
  EXPECT_EQ(delta_r_closed(12, 4), 21);
  EXPECT_EQ(delta_r_closed(8, 4), 13);
  EXPECT_THROW(delta_r_closed(10, 1), RangeError);
  EXPECT_THROW(delta_r_closed(10, 6), RangeError);
}

TEST(DeltaR, BruteForceExamples) {
  EXPECT_EQ(delta_r_bruteforce(8, 3), 7);
  EXPECT_EQ(delta_r_bruteforce(8, 4), 13);
  EXPECT_EQ(delta_r_bruteforce(14, 5), 41);
  EXPECT_THROW(delta_r_bruteforce(21, 3), RangeError);
}

TEST(DeltaR, BruteForceMatchesClosedForm) {
  for (std::int64_t n = 4; n <= 16; ++n)
    for (std::int64_t r = 2; 2 * r <= n; ++r) EXPECT_EQ(delta_r_bruteforce(n, r), delta_r_closed(n, r)) << n << " " << r;
}

TEST(DeltaR, SmallRadiiAreOrdered) {
  for (std::int64_t n = 8; n <= 200; ++n) {
    EXPECT_LE(delta_r_closed(n, 2), delta_r_closed(n, 3));
    EXPECT_LE(delta_r_closed(n, 3), delta_r_closed(n, 4));
  }
}

TEST(EdgeCap, Examples) {
  EXPECT_EQ(m_cap(10, 2), 44);
  EXPECT_EQ(m_cap(10, 4), 28);
  EXPECT_EQ(m_cap(10, 1), 45);
  EXPECT_EQ(m_cap(10, 3), 36);
}

TEST(EdgeCap, PositiveAndNonIncreasing) {
  for (std::int64_t n = 2; n <= 500; ++n) {
    std::int64_t prev = m_cap(n, 1);
    for (std::int64_t r = 2; 2 * r <= n; ++r) {
      const auto cur = m_cap(n, r);
      ASSERT_GT(cur, 0) << n << " " << r;
      ASSERT_LE(cur, prev) << n << " " << r;
      prev = cur;
    }
  }
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound_B(10, 9), 0);
  EXPECT_EQ(quarter_string(upper_bound_B(10, 12)), "5/2");
  EXPECT_EQ(quarter_string(upper_bound_B(10, 40)), "3/2");
  EXPECT_EQ(upper_bound_detail(10, 40).r_star, 3);
  EXPECT_EQ(quarter_string(upper_bound_B(10, 30)), "2");
  EXPECT_THROW(upper_bound_B(10, 8), RangeError);
  EXPECT_THROW(upper_bound_B(10, 46), RangeError);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound_B(10, 9), 0);
  EXPECT_EQ(quarter_string(lower_bound_B(10, 12)), "5/2");
  EXPECT_EQ(quarter_string(lower_bound_B(10, 30)), "5/4");
  EXPECT_EQ(lower_bound_detail(10, 30).n0, 8);
  EXPECT_EQ(quarter_string(lower_bound_B(10, 45)), "3/4");
}

TEST(Bounds, SearchesMatchLinearScans) {
  for (std::int64_t n = 1; n <= 120; ++n)
    for (std::int64_t m = n - 1; m <= choose2(n); ++m) {
      if (m < 0) continue;
      ASSERT_EQ(upper_bound_B(n, m), b2_scan(n, m)) << n << " " << m;
      ASSERT_EQ(lower_bound_B(n, m), b1_scan(n, m)) << n << " " << m;
    }
}

TEST(AExact, Examples) {
  EXPECT_EQ(a_exact(5, 4), 0);
  EXPECT_EQ(a_exact(7, 8), 3);
  EXPECT_EQ(a_exact(5, 8), 4);
  EXPECT_EQ(a_exact(3, 3), 3);
}

TEST(GapReport, Examples) {
  const auto r = gap_report(10, 30);
  EXPECT_EQ(r.a_quarters, 4);
  EXPECT_EQ(r.b1_quarters, 5);
  EXPECT_EQ(r.b2_quarters, 8);
  EXPECT_NEAR(r.gap_bound, std::sqrt(30.0) / 4 + 1, 1e-12);
  for (std::int64_t n = 2; n <= 40; ++n) {
    const auto t = gap_report(n, n - 1);
    EXPECT_EQ(t.b2_quarters - t.b1_quarters, 0);
  }
  EXPECT_EQ(gap_report(4, 6).b2_quarters, 4);
  for (std::int64_t n = 5; n <= 40; ++n) {
    const auto k = gap_report(n, choose2(n));
    EXPECT_EQ(k.b2_quarters, 4);
    EXPECT_EQ(k.r_star, 2);
    EXPECT_EQ(k.b1_quarters, n - *k.n0 + 3);
  }
}

TEST(GapReport, HoldsUpToTwoHundred) {
  for (std::int64_t n = 1; n <= 200; ++n)
    for (std::int64_t m = std::max<std::int64_t>(n - 1, 0); m <= choose2(n); ++m) {
      const auto r = gap_report(n, m);
      ASSERT_LE(r.b1_quarters, r.b2_quarters);
      ASSERT_LE(r.a_quarters, r.b2_quarters);
      ASSERT_LT(static_cast<double>(r.b2_quarters - r.b1_quarters) / 4.0, r.gap_bound);
    }
}

TEST(GapHolds, ExactBoundary) {
  // 3n = 27 is a square: (q-4)^2 = 27 has no integer solution, so test n = 12 (3n = 36)
  EXPECT_TRUE(gap_holds(12, 9));    // 5^2 = 25 < 36
  EXPECT_FALSE(gap_holds(12, 10));  // 6^2 = 36
  EXPECT_TRUE(gap_holds(1, 3));
}

TEST(LambdaR, MatchesEdgeCapThreshold) {
  for (std::int64_t n = 4; n <= 120; ++n)
    for (std::int64_t r = 2; 2 * r <= n; ++r)
      for (std::int64_t j = 3; j <= n; ++j)
        ASSERT_EQ(m_cap(n, r) < n + choose2(j - 1), lambda_r(n, r) < j * j - 3 * j) << n << " " << r << " " << j;
  EXPECT_EQ(lambda_r(10, 3), 50);
}

TEST(GapEstimate, CliqueOrders) {
  for (std::int64_t n = 6; n <= 100; ++n)
    for (std::int64_t r = 3; 2 * r <= n; ++r) {
      const auto e = gap_estimate(n, r);
      EXPECT_EQ(e.lambda_r, lambda_r(n, r));
      EXPECT_LE(static_cast<double>(e.n0), e.n0_prime + 1e-9) << n << " " << r;
      EXPECT_LE(e.n0, e.n1);
      const std::int64_t limit = (r == 3 || r == 4 || r == n / 2) ? 2 : 4;
      EXPECT_LE(e.n1 - e.n0, limit) << n << " " << r;
    }
  EXPECT_THROW(gap_estimate(10, 2), RangeError);
  EXPECT_THROW(gap_estimate(10, 6), RangeError);
}
