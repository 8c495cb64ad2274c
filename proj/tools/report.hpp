// SPDX-License-Identifier: MIT
//
// Report model for the command-line surface.  A verification run is a
// suite of items, each carrying named claims with expected and actual
// values; the suite passes exactly when every claim does.  JSON output
// is byte-stable for a fixed seed: keys render in fixed order, numbers
// in base 10, matrices row-major, and the elapsed_ms field is pinned to
// zero in machine-readable output (wall-clock timing goes to stderr).

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"
#include "regulib/torusnorm.hpp"

namespace regulib::tools {

using Json = nlohmann::ordered_json;

/// One verified statement: expected versus actual, both rendered as
/// strings so exact values survive serialization untouched.
struct Claim {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Claim that passes exactly when the two renderings agree.
[[nodiscard]] Claim claim_eq(std::string name, std::string expected,
                             std::string actual);

/// Claim with an explicitly decided outcome (for bound checks where
/// expected is a relation, not a value).
[[nodiscard]] Claim claim_rel(std::string name, std::string expected,
                              std::string actual, bool pass);

/// One checked object (a table row, a parameter point, a construction).
struct ReportItem {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<Claim> claims;

  [[nodiscard]] bool pass() const;
};

/// A full suite run.
struct Report {
  std::string suite;
  unsigned long long seed = 0;
  long long elapsed_ms = 0;
  std::vector<ReportItem> items;

  [[nodiscard]] bool pass() const;
};

/// Jordan types render as "n1+n2+…" (blocks descending); the empty type
/// renders as "0".
[[nodiscard]] std::string partition_string(const JordanType& t);

/// Row-major nested arrays of base-10 field representatives.
[[nodiscard]] Json matrix_json(const Matrix& m);

/// Row-major nested arrays for integer matrices.
[[nodiscard]] Json int_matrix_json(const IntMatrix& m);

/// null, or {"kind": …, "basis"/"element": …} depending on the witness
/// payload.
[[nodiscard]] Json witness_json(const std::optional<ContainmentWitness>& w);

/// null, or {"kind": "quadratic"/"symplectic", "matrix": …} with the
/// upper-triangular quadratic matrix respectively the alternating gram.
[[nodiscard]] Json form_json(
    const std::optional<std::variant<QuadSpace, SympSpace>>& form);

/// Fixed-key-order JSON document for a suite run.
[[nodiscard]] Json report_json(const Report& report);

/// Human-readable rendering: one line per item, failing claims expanded,
/// a summary line last.
[[nodiscard]] std::string render_text(const Report& report);

/// One tab-separated row per claim, with a header row.
[[nodiscard]] std::string render_tsv(const Report& report);

/// Depth-first flattening of a JSON document into "path<TAB>value" rows
/// (arrays index with [k]), used by the tabular construct output.
[[nodiscard]] std::string flatten_tsv(const Json& doc);

}  // namespace regulib::tools
