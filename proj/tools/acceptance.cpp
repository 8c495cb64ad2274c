// SPDX-License-Identifier: MIT
//
// Acceptance runner.  Executes every shipped verification suite at its
// default parameters, one criterion per line, each with a pinned
// wall-clock budget.  All arithmetic is exact, so the only tolerance is
// the time budget; a criterion passes when every claim holds and the
// run fits its budget.  Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "suites.hpp"

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> suites;
  double budget_seconds;
};

}  // namespace

int main() {
  using regulib::tools::Report;
  using regulib::tools::SuiteOptions;

  const std::vector<Criterion> criteria = {
      {"01 p-th power calculus matches block oracle (n<=24)",
       {"lemma-2.3"},
       60.0},
      {"02 tensor near-regularity happens only at 2x2 (ab<=16)",
       {"lemma-2.4"},
       30.0},
      {"03 classical regular representatives hit exact patterns",
       {"lemma-2.8"},
       60.0},
      {"04 catalogue rows: single block, order bound, irreducible",
       {"table-1"},
       120.0},
      {"05 wreath tower biconditional (witness iff d > 1)",
       {"prop-6.1"},
       120.0},
      {"06 orthogonal wreath power centralizes its torus",
       {"example-6.4"},
       120.0},
      {"07 torus-normalizer trichotomy classifications",
       {"example-6.6", "prop-6.7"},
       30.0},
      {"08 tensor-cycle constructions hit stated types",
       {"lemma-2.7"},
       10.0},
      {"09 cyclotomic companion order witnesses",
       {"prop-7.1"},
       5.0},
      {"10 no distinguished-coset counterexample sweep",
       {"theorem-A"},
       300.0},
  };

  SuiteOptions options;  // library defaults; worker count auto-detected
  bool all_pass = true;

  std::printf("acceptance: exact-arithmetic claims, tolerance = none; "
              "per-criterion budget pinned below\n");
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool claims_pass = true;
    std::size_t items = 0;
    std::size_t claims = 0;
    std::string error;
    std::vector<std::string> violations;
    try {
      for (const std::string& suite : criterion.suites) {
        const Report report = regulib::tools::run_suite(suite, options);
        claims_pass = claims_pass && report.pass();
        items += report.items.size();
        for (const auto& item : report.items) {
          claims += item.claims.size();
          for (const auto& claim : item.claims) {
            if (!claim.pass) {
              violations.push_back(suite + " / " + item.id + " / " +
                                   claim.name + ": expected " +
                                   claim.expected + ", got " + claim.actual);
            }
          }
        }
      }
    } catch (const std::exception& e) {
      claims_pass = false;
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    const bool within_budget = seconds <= criterion.budget_seconds;
    const bool pass = claims_pass && within_budget;
    all_pass = all_pass && pass;

    std::printf("%s  %-58s  %7.2fs / %6.0fs  items=%zu claims=%zu",
                pass ? "PASS" : "FAIL", criterion.label.c_str(), seconds,
                criterion.budget_seconds, items, claims);
    if (!claims_pass && !error.empty()) std::printf("  error=%s", error.c_str());
    if (claims_pass && !within_budget) std::printf("  over budget");
    std::printf("\n");
    for (const std::string& violation : violations) {
      std::printf("      violated claim: %s\n", violation.c_str());
    }
  }

  std::printf("acceptance: %s\n", all_pass ? "ALL CRITERIA PASS"
                                           : "CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
