// SPDX-License-Identifier: MIT
//
// Command-line surface.  `verify <suite>` runs a verification suite and
// exits 0 on all-pass, 1 on any violated claim, 2 on usage errors;
// `construct <id>` builds one datum and dumps it.  JSON output is
// byte-identical across runs for a fixed seed.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "construct.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace {

unsigned long long default_seed() {
  if (const char* env = std::getenv("REGULIB_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return 0;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& part : parts) {
    if (!out.empty()) out += ", ";
    out += part;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using regulib::tools::ConstructOptions;
  using regulib::tools::Report;
  using regulib::tools::SuiteOptions;

  CLI::App app{
      "regulib: exact unipotent Jordan-block calculus over GF(p) — "
      "verification suites and construction dumps"};
  app.require_subcommand(1);

  std::optional<unsigned> p, max_n, l, m, f, a, d;
  unsigned long long seed = default_seed();
  unsigned jobs = 0;
  unsigned long long cap = 1'000'000;
  std::string suite_id;
  std::string construction_id;
  std::string verify_emit = "text";
  std::string construct_emit = "json";

  const auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Field characteristic filter (prime)");
    cmd->add_option("--max-n", max_n, "Upper bound for dimension sweeps");
    cmd->add_option("--l", l, "Rank / half-dimension parameter");
    cmd->add_option("--m", m, "Degree / odd-part parameter");
    cmd->add_option("--f", f, "Two-power exponent parameter");
    cmd->add_option("--a", a, "Prime-power exponent parameter");
    cmd->add_option("--d", d, "Weight-multiplicity parameter");
    cmd->add_option("--seed", seed,
                    "Run seed recorded in reports (default: REGULIB_SEED "
                    "or 0)");
    cmd->add_option("--cap", cap, "Order-search cap for integer matrices");
  };

  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", suite_id,
                   "Suite id: " + join(regulib::tools::suite_ids()))
      ->required();
  add_shared(verify);
  verify->add_option("--jobs", jobs,
                     "Worker threads (0 = hardware concurrency, 1 = serial)");
  verify->add_option("--emit", verify_emit, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}));

  CLI::App* construct =
      app.add_subcommand("construct", "Build and dump one construction");
  construct
      ->add_option("construction", construction_id,
                   "Construction id: " +
                       join(regulib::tools::construction_ids()))
      ->required();
  add_shared(construct);
  construct->add_option("--emit", construct_emit, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      SuiteOptions options;
      options.p = p;
      options.max_n = max_n;
      options.l = l;
      options.m = m;
      options.f = f;
      options.a = a;
      options.d = d;
      options.seed = seed;
      options.jobs = jobs;
      options.cap = cap;

      const auto start = std::chrono::steady_clock::now();
      const Report report = regulib::tools::run_suite(suite_id, options);
      const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

      if (verify_emit == "json") {
        std::cout << regulib::tools::report_json(report).dump(2) << '\n';
      } else if (verify_emit == "tsv") {
        std::cout << regulib::tools::render_tsv(report);
      } else {
        std::cout << regulib::tools::render_text(report);
      }
      std::cerr << "# " << suite_id << " wall time: " << wall << " ms\n";
      return report.pass() ? 0 : 1;
    }

    ConstructOptions options;
    options.p = p;
    options.l = l;
    options.m = m;
    options.f = f;
    options.a = a;
    options.d = d;
    options.seed = seed;
    options.cap = cap;
    const regulib::tools::Json doc =
        regulib::tools::run_construct(construction_id, options);
    if (construct_emit == "tsv") {
      std::cout << regulib::tools::flatten_tsv(doc);
    } else {
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
