#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/length.hpp"

namespace hyp {

constexpr std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Layer sizes k_0 = 1, k_1, ..., k_r around a vertex at eccentricity r.
struct LayerProfile {
  std::vector<std::int64_t> k;

  std::int64_t r() const { return static_cast<std::int64_t>(k.size()) - 1; }
  std::int64_t n() const {
    std::int64_t s = 0;
    for (auto x : k) s += x;
    return s;
  }
};

inline void validate_profile(const LayerProfile& p) {
  if (p.k.size() < 3) throw InvalidProfile("layer profile needs r >= 2");
  if (p.k.front() != 1) throw InvalidProfile("layer profile must start with k_0 = 1");
  for (std::size_t j = 1; j + 1 < p.k.size(); ++j)
    if (p.k[j] < 2) throw InvalidProfile("layer k_" + std::to_string(j) + " = " + std::to_string(p.k[j]) + " < 2");
  if (p.k.back() < 1) throw InvalidProfile("last layer must be nonempty");
}

/// Number of vertex pairs forced to be non-adjacent by the layering:
/// sum over t >= 2 of k_t * (k_0 + ... + k_{t-2}).
inline std::int64_t f_r_eval(const LayerProfile& p) {
  validate_profile(p);
  std::int64_t total = 0;
  std::int64_t prefix = 0;  // k_0 + ... + k_{t-2}
  for (std::size_t t = 2; t < p.k.size(); ++t) {
    prefix += p.k[t - 2];
    total += p.k[t] * prefix;
  }
  return total;
}

namespace detail {

inline void check_radius(std::int64_t n, std::int64_t r, std::int64_t lo) {
  if (r < lo || 2 * r > n)
    throw RangeError("r = " + std::to_string(r) + " outside [" + std::to_string(lo) + ", floor(n/2)] for n = " + std::to_string(n));
}

inline void check_nm(std::int64_t n, std::int64_t m) {
  if (n < 1) throw RangeError("n = " + std::to_string(n) + " must be positive");
  if (m < n - 1 || m > choose2(n))
    throw RangeError("m = " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " + std::to_string(choose2(n)) + "] for n = " +
                     std::to_string(n));
}

}  // namespace detail

/// Minimum of f_r over all admissible layer profiles with n vertices.
inline std::int64_t delta_r_closed(std::int64_t n, std::int64_t r) {
  detail::check_radius(n, r, 2);
  if (r == 2) return 1;
  if (r == 3) return n - 1;
  return 2 * n * (r - 3) - 2 * r * r + 6 * r + 5;
}

/// Exhaustive minimum of f_r over integer profiles; an oracle for delta_r_closed.
inline std::int64_t delta_r_bruteforce(std::int64_t n, std::int64_t r) {
  detail::check_radius(n, r, 2);
  if (n > 20) throw RangeError("delta_r_bruteforce is limited to n <= 20");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // Fills layer t given `remaining` vertices, the partial objective, and the
  // prefix sums P_{t-2} = k_0 + ... + k_{t-2} and P_{t-1}. f only grows, so a
  // partial value at or above the best complete one is pruned.
  auto rec = [&](auto&& self, std::int64_t t, std::int64_t remaining, std::int64_t partial, std::int64_t p_before,
                 std::int64_t p_last) -> void {
    if (partial >= best) return;
    if (t == r) {
      best = std::min(best, partial + remaining * p_before);
      return;
    }
    const std::int64_t reserve = 2 * (r - 1 - t) + 1;
    for (std::int64_t kt = 2; kt <= remaining - reserve; ++kt)
      self(self, t + 1, remaining - kt, partial + (t >= 2 ? kt * p_before : 0), p_last, p_last + kt);
  };
  rec(rec, 1, n - 1, 0, 0, 1);
  return best;
}

/// Edge cap compatible with effective diameter r: C(n,2) - Delta_r, with M(n,1) = C(n,2).
inline std::int64_t m_cap(std::int64_t n, std::int64_t r) {
  detail::check_radius(n, r, 1);
  if (r == 1) return choose2(n);
  return choose2(n) - delta_r_closed(n, r);
}

struct UpperBound {
  std::int64_t quarters = 0;
  std::optional<std::int64_t> r_star;
};

struct LowerBound {
  std::int64_t quarters = 0;
  std::optional<std::int64_t> n0;
};

/// Upper bound b2(n,m) on the largest hyperbolicity constant over G(n,m).
inline UpperBound upper_bound_detail(std::int64_t n, std::int64_t m) {
  detail::check_nm(n, m);
  if (m == n - 1) return {0, std::nullopt};
  if (n >= 3 && m <= n + 3) return {n, std::nullopt};
  // M(n, r) is non-increasing in r, so {r : m > M(n,r)} is an upper interval.
  std::int64_t lo = 2;
  std::int64_t hi = n / 2;
  if (hi < 2 || m <= m_cap(n, hi)) return {n, std::nullopt};
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (m > m_cap(n, mid)) hi = mid;
    else lo = mid + 1;
  }
  return {2 * lo, lo};
}

inline std::int64_t upper_bound_B(std::int64_t n, std::int64_t m) { return upper_bound_detail(n, m).quarters; }

/// Smallest j >= start with target <= n + C(j-1, 2).
inline std::int64_t smallest_clique_order(std::int64_t n, std::int64_t target, std::int64_t start) {
  std::int64_t lo = start;
  std::int64_t hi = std::max(start, n + 1);
  while (target > n + choose2(hi - 1)) hi *= 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (target <= n + choose2(mid - 1)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

/// Lower bound b1(n,m) from the cycle-plus-clique witnesses.
inline LowerBound lower_bound_detail(std::int64_t n, std::int64_t m) {
  detail::check_nm(n, m);
  if (m == n - 1) return {0, std::nullopt};
  if (m <= n + 3) return {n, std::nullopt};
  const std::int64_t n0 = smallest_clique_order(n, m, 5);
  if (n0 > n) throw std::logic_error("clique order exceeds n for (" + std::to_string(n) + "," + std::to_string(m) + ")");
  return {n - n0 + 3, n0};
}

inline std::int64_t lower_bound_B(std::int64_t n, std::int64_t m) { return lower_bound_detail(n, m).quarters; }

/// Minimum hyperbolicity constant over G(n,m), in quarters: 0, 3 or 4.
inline std::int64_t a_exact(std::int64_t n, std::int64_t m) {
  detail::check_nm(n, m);
  if (m == n - 1) return 0;
  if (2 * m <= 3 * n - 3) return 3;
  return 4;
}

/// Exact test of diff/4 < sqrt(3n)/4 + 1, i.e. diff - 4 < sqrt(3n).
constexpr bool gap_holds(std::int64_t n, std::int64_t diff_quarters) {
  const std::int64_t lhs = diff_quarters - 4;
  return lhs < 0 || lhs * lhs < 3 * n;
}

inline double gap_bound(std::int64_t n) { return std::sqrt(3.0 * static_cast<double>(n)) / 4.0 + 1.0; }

struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t a_quarters = 0;
  std::int64_t b1_quarters = 0;
  std::int64_t b2_quarters = 0;
  double gap_bound = 0.0;
  std::optional<std::int64_t> r_star;
  std::optional<std::int64_t> n0;
};

inline BoundsReport gap_report(std::int64_t n, std::int64_t m) {
  const UpperBound ub = upper_bound_detail(n, m);
  const LowerBound lb = lower_bound_detail(n, m);
  BoundsReport rep{n, m, a_exact(n, m), lb.quarters, ub.quarters, gap_bound(n), ub.r_star, lb.n0};
  if (rep.a_quarters > rep.b2_quarters || rep.b1_quarters > rep.b2_quarters || !gap_holds(n, rep.b2_quarters - rep.b1_quarters))
    throw std::logic_error("bounds invariant violated at (" + std::to_string(n) + "," + std::to_string(m) + ")");
  return rep;
}

/// lambda_r from the threshold M(n,r) < n + C(n0-1, 2)  <=>  lambda_r < n0^2 - 3 n0.
constexpr std::int64_t lambda_r(std::int64_t n, std::int64_t r) {
  if (r == 2) return n * n - 3 * n - 4;
  if (r == 3) return n * n - 5 * n;
  return n * n + 9 * n - 4 * n * r + 4 * r * r - 12 * r - 12;
}

struct GapEstimate {
  std::int64_t lambda_r = 0;
  double n0_prime = 0.0;
  double n1_prime = 0.0;
  std::int64_t n0 = 0;  // smallest j in [3, n] with M(n,r) < n + C(j-1,2)
  std::int64_t n1 = 0;  // same with M(n,r-1)
};

inline GapEstimate gap_estimate(std::int64_t n, std::int64_t r) {
  detail::check_radius(n, r, 3);
  GapEstimate e;
  e.lambda_r = lambda_r(n, r);
  e.n0_prime = (5.0 + std::sqrt(9.0 + 4.0 * static_cast<double>(e.lambda_r))) / 2.0;
  e.n1_prime = (5.0 + std::sqrt(9.0 + 4.0 * static_cast<double>(lambda_r(n, r - 1)))) / 2.0;
  e.n0 = smallest_clique_order(n, m_cap(n, r) + 1, 3);
  e.n1 = smallest_clique_order(n, m_cap(n, r - 1) + 1, 3);
  return e;
}

}  // namespace hyp
