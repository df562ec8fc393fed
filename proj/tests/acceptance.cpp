#include <cstdio>
#include <iostream>

#include "hyp/verify.hpp"

// Runs every acceptance criterion at full size and prints one PASS/FAIL line
// each. A criterion also fails when it exceeds its time budget.
int main() {
  constexpr double kBudgetSeconds[hyp::Verifier::kCount + 1] = {0, 60, 900, 1800, 300, 60, 600, 1e9, 600, 1, 1200, 1e9};
  hyp::VerifyOptions opt;
  opt.max_n = 10;
  opt.jobs = hyp::default_jobs();
  hyp::Verifier verifier(opt);
  int failures = 0;
  verifier.run_all([&](const hyp::CriterionResult& r) {
    const bool in_time = r.seconds <= kBudgetSeconds[r.id];
    const bool ok = r.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d: %s: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(), r.seconds,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
  });
  std::printf("%d of %d criteria passed\n", hyp::Verifier::kCount - failures, hyp::Verifier::kCount);
  return failures == 0 ? 0 : 1;
}
