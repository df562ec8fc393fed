#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyp/hyp.hpp"
#include "hyp/io.hpp"
#include "hyp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCap = 2;
constexpr int kExitInvariant = 3;

std::uint64_t geodesic_cap_from_env() {
  const char* raw = std::getenv("HYP_GEODESIC_CAP");
  if (raw == nullptr || *raw == '\0') return hyp::kDefaultGeodesicCap;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0 || text.front() == '-')
    throw hyp::RangeError("HYP_GEODESIC_CAP must be a positive integer, got '" + text + "'");
  return value;
}

hyp::Graph load_graph(const std::string& path) {
  if (path == "-") return hyp::read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw hyp::RangeError("cannot open " + path);
  return hyp::read_edge_list(in);
}

void print_delta(const hyp::DeltaResult& r) {
  std::cout << hyp::to_string(r.delta) << "\n";
  std::cout << "mode " << hyp::to_string(r.mode) << "\n";
  for (std::size_t s = 0; s < 3; ++s) {
    const auto& side = r.witness.sides[s];
    std::cout << "side " << s << " " << hyp::to_string(side.start) << " ->";
    for (auto v : side.path) std::cout << " " << v;
    std::cout << " -> " << hyp::to_string(side.end) << " length " << hyp::to_string(side.length) << "\n";
  }
  std::cout << "point " << hyp::to_string(r.witness_point) << " on side " << r.witness_side << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperbolicity constants of unit-edge graphs and bounds over G(n,m)"};
  app.require_subcommand(1);

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "hyperbolicity constant of an edge-list graph ('-' reads stdin)");
  std::string delta_file;
  std::string mode_name = "standard";
  bool use_blocks = false;
  bool delta_json = false;
  unsigned jobs = hyp::default_jobs();
  delta_cmd->add_option("file", delta_file, "edge list: 'n m' then one 'u v' per line")->required();
  delta_cmd->add_option("--mode", mode_name, "corner and sampling grid")->check(CLI::IsMember({"standard", "fine"}));
  delta_cmd->add_flag("--blocks", use_blocks, "compute the maximum over blocks");
  delta_cmd->add_flag("--json", delta_json, "JSON output");
  delta_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "A(n,m), b1(n,m), b2(n,m) and the gap bound");
  std::int64_t bn = 0;
  std::int64_t bm = 0;
  bool bounds_json = false;
  bounds_cmd->add_option("n", bn)->required();
  bounds_cmd->add_option("m", bm)->required();
  bounds_cmd->add_flag("--json", bounds_json, "JSON output");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "print an extremal graph as an edge list");
  construct_cmd->require_subcommand(1);
  std::int32_t cn = 0;
  std::int32_t cm = 0;
  std::int32_t cn0 = 0;
  std::vector<std::int32_t> parts;
  auto* c_cactus = construct_cmd->add_subcommand("cactus", "triangle cactus in G(n,m), 2m <= 3n-3");
  c_cactus->add_option("n", cn)->required();
  c_cactus->add_option("m", cm)->required();
  auto* c_kn = construct_cmd->add_subcommand("kn-minus", "K_n minus cliques on disjoint groups of the given sizes");
  c_kn->add_option("n", cn)->required();
  c_kn->add_option("parts", parts)->required();
  auto* c_aone = construct_cmd->add_subcommand("a-one", "graph in G(n,m) with hyperbolicity constant 1, 2m > 3n-3");
  c_aone->add_option("n", cn)->required();
  c_aone->add_option("m", cm)->required();
  auto* c_cycle = construct_cmd->add_subcommand("cycle-clique", "n-cycle plus m-n chords among its first n0 vertices");
  c_cycle->add_option("n", cn)->required();
  c_cycle->add_option("n0", cn0)->required();
  c_cycle->add_option("m", cm)->required();
  auto* c_tree = construct_cmd->add_subcommand("tree", "path on n vertices");
  c_tree->add_option("n", cn)->required();

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "blocks and cut vertices as JSON");
  std::string decompose_file;
  decompose_cmd->add_option("file", decompose_file, "edge list ('-' reads stdin)")->required();

  // random
  auto* random_cmd = app.add_subcommand("random", "sample R'(n,m) and check A <= delta <= b2");
  std::int32_t rn = 0;
  std::int32_t rm = 0;
  std::int32_t trials = 0;
  std::uint64_t seed = 0;
  std::int32_t random_max_n = 10;
  random_cmd->add_option("--n", rn)->required();
  random_cmd->add_option("--m", rm)->required();
  random_cmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("--max-n", random_max_n, "largest n for the exact oracle");
  random_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  hyp::VerifyOptions vopt;
  verify_cmd->add_option("--max-n", vopt.max_n, "cap on graph orders; 10 runs everything at full size")->check(CLI::Range(3, 10));
  verify_cmd->add_option("--seed", vopt.seed, "seed for the random checks");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    const std::uint64_t cap = geodesic_cap_from_env();

    if (*delta_cmd) {
      const hyp::Graph g = load_graph(delta_file);
      const hyp::DeltaOptions opt{mode_name == "fine" ? hyp::Mode::Fine : hyp::Mode::Standard, cap, jobs};
      const hyp::DeltaResult r = use_blocks ? hyp::delta_via_blocks(g, opt) : hyp::delta_exact(g, opt);
      if (delta_json) std::cout << hyp::to_json(r).dump(2) << "\n";
      else print_delta(r);
    } else if (*bounds_cmd) {
      const hyp::BoundsReport rep = hyp::gap_report(bn, bm);
      if (bounds_json) {
        std::cout << hyp::to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "A " << hyp::quarter_string(rep.a_quarters) << "\n"
                  << "b1 " << hyp::quarter_string(rep.b1_quarters) << "\n"
                  << "b2 " << hyp::quarter_string(rep.b2_quarters) << "\n"
                  << "gap " << hyp::quarter_string(rep.b2_quarters - rep.b1_quarters) << "\n"
                  << "gap_bound " << rep.gap_bound << "\n";
      }
    } else if (*construct_cmd) {
      hyp::Graph g;
      if (*c_cactus) g = hyp::triangle_cactus(cn, cm);
      else if (*c_kn) g = hyp::kn_minus_cliques(hyp::CliqueRemovalSpec{cn, parts});
      else if (*c_aone) g = hyp::a_one_witness(cn, cm);
      else if (*c_cycle) g = hyp::cycle_clique_witness(cn, cn0, cm);
      else g = hyp::tree_witness(cn);
      hyp::write_edge_list(std::cout, g);
    } else if (*decompose_cmd) {
      const hyp::Graph g = load_graph(decompose_file);
      std::cout << hyp::to_json(hyp::canonical_t_decomposition(g)).dump(2) << "\n";
    } else if (*random_cmd) {
      hyp::ExperimentOptions eo;
      eo.max_n = random_max_n;
      eo.delta = hyp::DeltaOptions{hyp::Mode::Standard, cap, jobs};
      const hyp::ExperimentStats st = hyp::run_experiment(rn, rm, trials, seed, eo);
      std::cout << hyp::to_json(st).dump(2) << "\n";
      if (st.violations != 0) return kExitInvariant;
    } else if (*verify_cmd) {
      vopt.jobs = jobs;
      vopt.geodesic_cap = cap;
      hyp::Verifier verifier(vopt);
      bool all = true;
      verifier.run_all([&](const hyp::CriterionResult& r) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " (" << r.seconds << " s)"
                  << std::endl;
      });
      return all ? kExitOk : kExitInvariant;
    }
  } catch (const hyp::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const hyp::GridViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const hyp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
