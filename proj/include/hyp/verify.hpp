#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyp/bounds.hpp"
#include "hyp/constructions.hpp"
#include "hyp/decomposition.hpp"
#include "hyp/enumerate.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/io.hpp"
#include "hyp/metric.hpp"
#include "hyp/random.hpp"

namespace hyp {

struct VerifyOptions {
  // Caps graph orders for the oracle-backed checks. 10 or more runs every
  // check at full size; smaller values give a quicker, reduced run.
  std::int32_t max_n = 10;
  unsigned jobs = 1;
  std::uint64_t seed = 20260101;
  std::uint64_t geodesic_cap = kDefaultGeodesicCap;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Longest simple cycle length, 0 for forests. Exhaustive; meant for n <= 8.
inline std::int32_t longest_cycle(const Graph& g) {
  const std::int32_t n = g.order();
  std::int32_t best = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // simple paths from `start` through vertices larger than it
  auto dfs = [&](auto&& self, Vertex start, Vertex v, std::int32_t len) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 3) best = std::max(best, len);
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      self(self, start, w, len + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, s, 1);
    used[static_cast<std::size_t>(s)] = 0;
  }
  return best;
}

inline EdgeMask graph_mask(const Graph& g) {
  EdgeMask mask = 0;
  for (auto [u, v] : g.edges()) mask |= EdgeMask{1} << pair_bit(g.order(), u, v);
  return mask;
}

/// Every non-increasing list of part sizes that is a valid clique removal on n vertices.
inline std::vector<CliqueRemovalSpec> all_clique_removal_specs(std::int32_t n) {
  std::vector<CliqueRemovalSpec> out;
  std::vector<std::int32_t> parts;
  auto rec = [&](auto&& self, std::int32_t room, std::int32_t largest) -> void {
    if (!parts.empty()) out.push_back(CliqueRemovalSpec{n, parts});
    for (std::int32_t p = std::min(largest, room); p >= 2; --p) {
      parts.push_back(p);
      self(self, room - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n - 1);
  return out;
}

/// Runs the invariant suite. Standard-mode hyperbolicity constants computed by
/// criteria 2 to 8 are remembered per labeled graph so that criterion 11 can
/// recompute them in fine mode.
class Verifier {
 public:
  explicit Verifier(VerifyOptions opt = {}) : opt_(opt) {}

  static constexpr int kCount = 11;

  CriterionResult run(int id) {
    static const char* titles[kCount + 1] = {"",
                                             "delta_r closed form matches brute force",
                                             "A(n,m) witnesses attain a_exact",
                                             "exhaustive small graphs respect A, b1, b2",
                                             "paths, cycles and complete graphs",
                                             "gap sweep and clique-order estimates",
                                             "blocks reproduce delta",
                                             "delta < 1 iff every cycle is a triangle",
                                             "clique removals have diameter 2 and delta <= 1",
                                             "deficit partitions",
                                             "random model bounds and reproducibility",
                                             "standard mode equals fine mode"};
    if (id < 1 || id > kCount) throw RangeError("no criterion " + std::to_string(id));
    CriterionResult res{id, titles[id], false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = dispatch(id);
      res.passed = o.passed;
      res.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {}) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCount; ++id) {
      out.push_back(run(id));
      if (on_result) on_result(out.back());
    }
    return out;
  }

  std::size_t corpus_size() const { return corpus_.size(); }

 private:
  struct Outcome {
    bool passed = true;
    std::string detail;
  };

  using Key = std::pair<std::int32_t, std::vector<Edge>>;

  VerifyOptions opt_;
  std::map<Key, EighthLength> corpus_;
  std::mutex corpus_mutex_;
  std::map<int, bool> ran_;

  std::int32_t cap(std::int32_t n) const { return std::min(n, opt_.max_n); }

  DeltaOptions delta_options(Mode mode) const { return DeltaOptions{mode, opt_.geodesic_cap, 1}; }

  /// Standard-mode delta for each graph, computed in parallel and recorded in the corpus.
  std::vector<EighthLength> deltas(const std::vector<Graph>& graphs) {
    std::vector<EighthLength> out(graphs.size());
    parallel_for(graphs.size(), opt_.jobs, [&](std::size_t i) {
      const Key key{graphs[i].order(), graphs[i].edges()};
      {
        std::lock_guard lock(corpus_mutex_);
        if (auto it = corpus_.find(key); it != corpus_.end()) {
          out[i] = it->second;
          return;
        }
      }
      const EighthLength d = delta_exact(graphs[i], delta_options(Mode::Standard)).delta;
      std::lock_guard lock(corpus_mutex_);
      corpus_.emplace(key, d);
      out[i] = d;
    });
    return out;
  }

  static void fail(Outcome& o, const std::string& what) {
    if (o.passed) o.detail = what;
    o.passed = false;
  }

  Outcome dispatch(int id) {
    ran_[id] = true;
    switch (id) {
      case 1: return delta_r_oracle();
      case 2: return a_witnesses();
      case 3: return exhaustive_small();
      case 4: return landmarks();
      case 5: return gap_sweep();
      case 6: return block_identity();
      case 7: return sub_one();
      case 8: return clique_removals();
      case 9: return deficit_partitions();
      case 10: return random_suite();
      default: return refinement();
    }
  }

  Outcome delta_r_oracle() {
    Outcome o;
    std::int32_t checked = 0;
    for (std::int64_t n = 4; n <= 16; ++n)
      for (std::int64_t r = 2; 2 * r <= n; ++r) {
        ++checked;
        const auto brute = delta_r_bruteforce(n, r);
        const auto closed = delta_r_closed(n, r);
        if (brute != closed)
          fail(o, "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": brute " + std::to_string(brute) + " vs closed " +
                      std::to_string(closed));
      }
    if (o.passed) o.detail = std::to_string(checked) + " (n,r) pairs";
    return o;
  }

  static Graph a_witness(std::int32_t n, std::int32_t m) {
    if (m == n - 1) return tree_witness(n);
    if (2 * m <= 3 * n - 3) return triangle_cactus(n, m);
    return a_one_witness(n, m);
  }

  Outcome a_witnesses() {
    Outcome o;
    std::vector<Graph> graphs;
    std::vector<std::pair<std::int32_t, std::int32_t>> nm;
    for (std::int32_t n = 3; n <= cap(10); ++n)
      for (std::int32_t m = n - 1; m <= choose2(n); ++m) {
        graphs.push_back(a_witness(n, m));
        nm.emplace_back(n, m);
        if (graphs.back().order() != n || graphs.back().size() != m)
          fail(o, "witness for (" + std::to_string(n) + "," + std::to_string(m) + ") has wrong order or size");
      }
    const auto ds = deltas(graphs);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto [n, m] = nm[i];
      const auto want = a_exact(n, m);
      if (ds[i].in_quarters() != want)
        fail(o, "(" + std::to_string(n) + "," + std::to_string(m) + "): delta " + to_string(ds[i]) + " vs A " + quarter_string(want));
    }
    if (o.passed) o.detail = std::to_string(graphs.size()) + " witnesses, n in [3," + std::to_string(cap(10)) + "]";
    return o;
  }

  Outcome exhaustive_small() {
    Outcome o;
    std::int64_t labeled = 0;
    std::int64_t classes = 0;
    for (std::int32_t n = 4; n <= cap(6); ++n) {
      for (std::int32_t m = n - 1; m <= choose2(n); ++m) {
        // one representative per isomorphism class; the class of each labeled
        // graph is found by its canonical mask
        std::map<EdgeMask, Graph> reps;
        for_each_connected_labeled_graph(n, m, [&](const Graph& g) {
          ++labeled;
          const EdgeMask code = canonical_mask(n, graph_mask(g));
          if (!reps.count(code)) reps.emplace(code, g);
        });
        std::vector<Graph> graphs;
        for (auto& [code, g] : reps) graphs.push_back(g);
        classes += static_cast<std::int64_t>(graphs.size());
        const auto ds = deltas(graphs);
        const auto lo = std::min_element(ds.begin(), ds.end())->in_quarters();
        const auto hi = std::max_element(ds.begin(), ds.end())->in_quarters();
        const std::string where = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        if (lo != a_exact(n, m)) fail(o, where + ": min delta " + quarter_string(lo) + " vs A " + quarter_string(a_exact(n, m)));
        if (hi > upper_bound_B(n, m)) fail(o, where + ": max delta " + quarter_string(hi) + " above b2");
        if (hi < lower_bound_B(n, m)) fail(o, where + ": max delta " + quarter_string(hi) + " below b1");
      }
    }
    if (o.passed) o.detail = std::to_string(labeled) + " labeled graphs in " + std::to_string(classes) + " classes";
    return o;
  }

  Outcome landmarks() {
    Outcome o;
    std::vector<Graph> graphs;
    std::vector<std::pair<std::string, std::int64_t>> expect;  // name, quarters
    for (std::int32_t n = 1; n <= cap(10); ++n) {
      graphs.push_back(tree_witness(n));
      expect.emplace_back("P" + std::to_string(n), 0);
    }
    for (std::int32_t n = 3; n <= cap(10); ++n) {
      std::vector<Edge> e;
      for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
      graphs.push_back(build_graph(n, e));
      expect.emplace_back("C" + std::to_string(n), n);
    }
    for (std::int32_t n = 4; n <= cap(8); ++n) {
      std::vector<Edge> e;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
      graphs.push_back(build_graph(n, e));
      expect.emplace_back("K" + std::to_string(n), 4);
    }
    const auto ds = deltas(graphs);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (ds[i].in_quarters() != expect[i].second || !ds[i].on_quarter_grid())
        fail(o, expect[i].first + ": delta " + to_string(ds[i]) + " vs " + quarter_string(expect[i].second));
    if (o.passed) o.detail = std::to_string(graphs.size()) + " graphs";
    return o;
  }

  Outcome gap_sweep() {
    Outcome o;
    std::int64_t pairs = 0;
    double worst = 0.0;  // largest (b2 - b1) / gap_bound
    for (std::int64_t n = 3; n <= 500 && o.passed; ++n) {
      for (std::int64_t m = n - 1; m <= choose2(n); ++m) {
        ++pairs;
        const auto ub = upper_bound_B(n, m);
        const auto lb = lower_bound_B(n, m);
        const auto a = a_exact(n, m);
        const std::string where = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        if (!gap_holds(n, ub - lb)) {
          fail(o, where + ": b2 - b1 = " + quarter_string(ub - lb) + " not below sqrt(3n)/4 + 1");
          break;
        }
        if (a > ub || lb > ub) {
          fail(o, where + ": A <= b2 and b1 <= b2 must hold");
          break;
        }
        worst = std::max(worst, static_cast<double>(ub - lb) / 4.0 / gap_bound(n));
      }
      for (std::int64_t r = 3; 2 * r <= n; ++r) {
        const auto e = gap_estimate(n, r);
        const std::int64_t limit = (r == 3 || r == 4 || r == n / 2) ? 2 : 4;
        if (e.n1 - e.n0 > limit)
          fail(o, "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": n1 - n0 = " + std::to_string(e.n1 - e.n0) + " > " +
                      std::to_string(limit));
      }
    }
    if (o.passed) {
      std::ostringstream s;
      s << pairs << " (n,m) pairs, max gap ratio " << worst;
      o.detail = s.str();
    }
    return o;
  }

  /// Graphs with at least one cut vertex: small classes, constructions with
  /// tails or pendants, and seeded sparse random graphs.
  std::vector<Graph> cut_vertex_corpus() const {
    std::vector<Graph> out;
    auto add = [&](const Graph& g) {
      if (!cut_vertices(g).empty()) out.push_back(g);
    };
    for (std::int32_t n = 3; n <= cap(6); ++n)
      for (const auto& g : connected_graph_classes(n)) add(g);
    for (std::int32_t n = 7; n <= cap(9); ++n) {
      for (std::int32_t m = n; 2 * m <= 3 * n - 3; ++m) add(triangle_cactus(n, m));
      for (std::int32_t m = n + 1; m <= n + 6 && m < choose2(n); ++m)
        if (2 * m > 3 * n - 3) add(a_one_witness(n, m));
      for (std::int32_t t = 0; t < 8; ++t) {
        Rng rng = trial_rng(opt_.seed, static_cast<std::uint64_t>(1000 * n + t));
        add(random_graph_r_prime(n, n + 2 + t % 4, rng));
      }
    }
    return out;
  }

  Outcome block_identity() {
    Outcome o;
    const auto graphs = cut_vertex_corpus();
    const auto ds = deltas(graphs);
    std::vector<char> ok(graphs.size(), 1);
    parallel_for(graphs.size(), opt_.jobs, [&](std::size_t i) {
      const DeltaResult r = delta_via_blocks(graphs[i], delta_options(Mode::Standard));
      ok[i] = r.delta == ds[i] && (r.delta.units == 0 || witness_holds(graphs[i], r));
    });
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (!ok[i]) fail(o, "mismatch on " + std::to_string(graphs[i].order()) + "-vertex graph " + edge_list_string(graphs[i]));
    const std::size_t needed = opt_.max_n >= 9 ? 50 : 1;
    if (graphs.size() < needed) fail(o, "only " + std::to_string(graphs.size()) + " graphs with cut vertices");
    if (o.passed) o.detail = std::to_string(graphs.size()) + " graphs with cut vertices";
    return o;
  }

  Outcome sub_one() {
    Outcome o;
    std::int64_t below = 0;
    std::int64_t total = 0;
    for (std::int32_t n = 1; n <= cap(7); ++n) {
      const auto graphs = connected_graph_classes(n);
      const auto ds = deltas(graphs);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++total;
        const auto q = ds[i].in_quarters();
        const bool short_cycles = longest_cycle(graphs[i]) <= 3;
        const std::string name = edge_list_string(graphs[i]);
        if ((q < 4) != short_cycles) fail(o, "delta " + quarter_string(q) + " disagrees with cycle lengths on " + name);
        if (q < 4) {
          ++below;
          if (q != 0 && q != 3) fail(o, "delta " + quarter_string(q) + " below 1 but not 0 or 3/4");
        }
        const SubOneClass c = classify_sub_one(graphs[i]);
        const SubOneClass want = q == 0 ? SubOneClass::IsTree : q == 3 ? SubOneClass::DeltaThreeQuarters : SubOneClass::AtLeastOne;
        if (c != want) fail(o, std::string("classify_sub_one says ") + to_string(c) + " for delta " + quarter_string(q));
      }
    }
    if (o.passed) o.detail = std::to_string(total) + " classes, " + std::to_string(below) + " with delta < 1";
    return o;
  }

  Outcome clique_removals() {
    Outcome o;
    std::vector<Graph> graphs;
    for (std::int32_t n = 3; n <= cap(8); ++n)
      for (const auto& spec : all_clique_removal_specs(n)) graphs.push_back(kn_minus_cliques(spec));
    const auto ds = deltas(graphs);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto diam = diam_graph(graphs[i]);
      if (diam != EighthLength::edges(2)) fail(o, "diam_graph " + to_string(diam) + " on " + edge_list_string(graphs[i]));
      if (ds[i] > EighthLength::edges(1)) fail(o, "delta " + to_string(ds[i]) + " > 1 on " + edge_list_string(graphs[i]));
    }
    if (o.passed) o.detail = std::to_string(graphs.size()) + " clique removal specs";
    return o;
  }

  Outcome deficit_partitions() {
    Outcome o;
    for (std::int64_t t = 1; t <= 10000; ++t) {
      const auto d = deficit_partition(t);
      std::int64_t sum = 0;
      std::int64_t pairs = 0;
      bool parts_ok = true;
      for (auto p : d.parts) {
        parts_ok = parts_ok && p >= 2;
        sum += p;
        pairs += choose2(p);
      }
      if (!parts_ok || sum > t + 2 || pairs != t) {
        fail(o, "t=" + std::to_string(t));
        break;
      }
    }
    if (o.passed) o.detail = "t in [1,10000]";
    return o;
  }

  Outcome random_suite() {
    Outcome o;
    const std::vector<std::pair<std::int32_t, std::int32_t>> cases = {{8, 7}, {8, 9}, {8, 12}, {8, 18}, {8, 28}, {10, 15}, {10, 20}};
    ExperimentOptions eo;
    eo.max_n = 10;
    eo.delta = DeltaOptions{Mode::Standard, opt_.geodesic_cap, opt_.jobs};
    std::int32_t run = 0;
    for (const auto& [n, m] : cases) {
      if (n > opt_.max_n) continue;
      const std::string where = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      const auto first = to_json(run_experiment(n, m, 100, opt_.seed, eo)).dump();
      const auto again = to_json(run_experiment(n, m, 100, opt_.seed, eo)).dump();
      const auto stats = Json::parse(first);
      if (stats["violations"].get<std::int32_t>() != 0) fail(o, where + ": " + stats["violations"].dump() + " violations");
      if (first != again) fail(o, where + ": rerun with the same seed differs");
      ++run;
    }
    if (o.passed) o.detail = std::to_string(run) + " (n,m) cases x 100 samples";
    return o;
  }

  Outcome refinement() {
    for (int id = 2; id <= 8; ++id)
      if (!ran_.count(id)) dispatch(id);
    Outcome o;
    std::vector<std::pair<Key, EighthLength>> items(corpus_.begin(), corpus_.end());
    std::vector<EighthLength> fine(items.size());
    parallel_for(items.size(), opt_.jobs, [&](std::size_t i) {
      const Graph g = build_graph(items[i].first.first, items[i].first.second);
      fine[i] = delta_exact(g, delta_options(Mode::Fine)).delta;
    });
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& [key, standard] = items[i];
      if (!standard.on_quarter_grid() || !fine[i].on_quarter_grid())
        fail(o, "off the quarter grid on " + edge_list_string(build_graph(key.first, key.second)));
      if (standard != fine[i])
        fail(o, "standard " + to_string(standard) + " vs fine " + to_string(fine[i]) + " on " +
                    edge_list_string(build_graph(key.first, key.second)));
    }
    if (o.passed) o.detail = std::to_string(items.size()) + " distinct graphs";
    return o;
  }
};

}  // namespace hyp
