// SPDX-License-Identifier: MIT
//
// Verification suites behind the `verify` subcommand and the acceptance
// runner.  Each suite checks one cluster of claims (a lemma's oracle
// equivalence, a table of representatives, a biconditional family…)
// and returns a Report whose items are independent and can run in
// parallel; item order in the report is deterministic regardless of the
// worker count.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace regulib::tools {

/// Options shared by all suites.  Unset filters mean "the suite's full
/// documented range".  jobs = 0 picks the hardware concurrency.
struct SuiteOptions {
  std::optional<unsigned> p;
  std::optional<unsigned> max_n;
  std::optional<unsigned> l;
  std::optional<unsigned> m;
  std::optional<unsigned> f;
  std::optional<unsigned> a;
  std::optional<unsigned> d;
  unsigned long long seed = 0;
  unsigned jobs = 0;
  unsigned long long cap = 1'000'000;
};

/// The suite identifiers accepted by run_suite, in canonical order.
[[nodiscard]] const std::vector<std::string>& suite_ids();

/// Runs one suite.  Throws std::invalid_argument for an unknown id.
[[nodiscard]] Report run_suite(const std::string& suite_id,
                               const SuiteOptions& options);

}  // namespace regulib::tools
