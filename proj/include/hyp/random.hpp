#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyp/bounds.hpp"
#include "hyp/errors.hpp"
#include "hyp/graph.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/metric.hpp"
#include "hyp/parallel.hpp"

namespace hyp {

// Both the engine and std::seed_seq are fully specified by the standard, and
// uniform_below avoids the implementation-defined distributions, so a seed
// reproduces the same graphs on every platform.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64/seed_seq/rejection-v1";

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw RangeError("uniform_below: empty range");
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

/// Independent stream for one trial of an experiment.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

/// Uniform labeled tree via a random Prufer sequence.
inline Graph random_tree(std::int32_t n, Rng& rng) {
  if (n < 1) throw RangeError("random_tree needs n >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));

  std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return build_graph(n, std::move(edges));
}

/// Random tree plus a uniform (m-n+1)-subset of the remaining vertex pairs.
inline Graph random_graph_r_prime(std::int32_t n, std::int32_t m, Rng& rng) {
  if (n < 1 || m < n - 1 || m > choose2(n))
    throw RangeError("random_graph_r_prime needs n-1 <= m <= C(n,2), got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> pool;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v)) pool.emplace_back(u, v);
  const auto extra = static_cast<std::size_t>(m - (n - 1));
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Edge> edges = tree.edges();
  edges.insert(edges.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(extra));
  return build_graph(n, std::move(edges));
}

struct ExperimentOptions {
  std::int32_t max_n = 10;
  DeltaOptions delta;
};

struct ExperimentStats {
  std::int32_t n = 0;
  std::int32_t m = 0;
  std::int32_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng = kRngName;
  std::int64_t a_quarters = 0;
  std::int64_t b2_quarters = 0;
  std::int64_t delta_min_quarters = 0;
  std::int64_t delta_max_quarters = 0;
  std::int64_t delta_sum_quarters = 0;  // mean = sum / (4 * trials)
  std::int32_t violations = 0;
  std::map<std::int64_t, std::int32_t> histogram;  // quarters -> count
};

/// Samples `trials` graphs from R'(n,m) and checks A(n,m) <= delta <= b2(n,m),
/// delta <= n/4 and delta <= diam/2 on each.
inline ExperimentStats run_experiment(std::int32_t n, std::int32_t m, std::int32_t trials, std::uint64_t seed,
                                      const ExperimentOptions& opt = {}) {
  if (n < 1 || m < n - 1 || m > choose2(n))
    throw RangeError("run_experiment needs n-1 <= m <= C(n,2), got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  if (n > opt.max_n) throw RangeError("n = " + std::to_string(n) + " exceeds the exact-oracle cap " + std::to_string(opt.max_n));
  if (trials < 1) throw RangeError("trials must be positive");

  ExperimentStats st;
  st.n = n;
  st.m = m;
  st.trials = trials;
  st.seed = seed;
  st.a_quarters = a_exact(n, m);
  st.b2_quarters = upper_bound_B(n, m);

  struct Sample {
    std::int64_t quarters = 0;
    bool ok = true;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(trials));
  DeltaOptions inner = opt.delta;
  const unsigned jobs = inner.jobs;
  inner.jobs = 1;
  parallel_for(samples.size(), jobs, [&](std::size_t t) {
    Rng rng = trial_rng(seed, t);
    const Graph g = random_graph_r_prime(n, m, rng);
    const EighthLength delta = delta_exact(g, inner).delta;
    const std::int64_t q = delta.in_quarters();
    const bool ok = g.size() == m && q >= st.a_quarters && q <= st.b2_quarters && q <= n &&
                    2 * delta.units <= diam_graph(g).units;
    samples[t] = Sample{q, ok};
  });

  st.delta_min_quarters = std::numeric_limits<std::int64_t>::max();
  for (const auto& s : samples) {
    st.delta_min_quarters = std::min(st.delta_min_quarters, s.quarters);
    st.delta_max_quarters = std::max(st.delta_max_quarters, s.quarters);
    st.delta_sum_quarters += s.quarters;
    st.violations += s.ok ? 0 : 1;
    ++st.histogram[s.quarters];
  }
  return st;
}

}  // namespace hyp
