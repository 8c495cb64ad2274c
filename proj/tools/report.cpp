// SPDX-License-Identifier: MIT

#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace regulib::tools {

Claim claim_eq(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return Claim{std::move(name), std::move(expected), std::move(actual), pass};
}

Claim claim_rel(std::string name, std::string expected, std::string actual,
                bool pass) {
  return Claim{std::move(name), std::move(expected), std::move(actual), pass};
}

bool ReportItem::pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.pass; });
}

bool Report::pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ReportItem& item) { return item.pass(); });
}

std::string partition_string(const JordanType& t) {
  if (t.blocks().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (unsigned b : t.blocks()) {
    if (!first) out << '+';
    out << b;
    first = false;
  }
  return out.str();
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(static_cast<int>(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (long long x : r) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_json(const std::optional<ContainmentWitness>& w) {
  if (!w.has_value()) return nullptr;
  Json out;
  out["kind"] = to_string(w->kind);
  if (const auto* basis = std::get_if<SubspaceBasis>(&w->data)) {
    out["basis"] = matrix_json(basis->matrix());
  } else {
    out["element"] = matrix_json(std::get<Matrix>(w->data));
  }
  return out;
}

Json form_json(
    const std::optional<std::variant<QuadSpace, SympSpace>>& form) {
  if (!form.has_value()) return nullptr;
  Json out;
  if (const auto* quad = std::get_if<QuadSpace>(&*form)) {
    out["kind"] = "quadratic";
    out["matrix"] = matrix_json(quad->quad());
  } else {
    out["kind"] = "symplectic";
    out["matrix"] = matrix_json(std::get<SympSpace>(*form).gram());
  }
  return out;
}

Json report_json(const Report& report) {
  Json doc;
  doc["schema"] = "regulib-report/1";
  doc["suite"] = report.suite;
  doc["seed"] = report.seed;
  doc["elapsed_ms"] = report.elapsed_ms;
  doc["pass"] = report.pass();
  Json items = Json::array();
  for (const ReportItem& item : report.items) {
    Json entry;
    entry["id"] = item.id;
    Json params = Json::object();
    for (const auto& [key, value] : item.params) params[key] = value;
    entry["params"] = std::move(params);
    entry["pass"] = item.pass();
    Json claims = Json::array();
    for (const Claim& claim : item.claims) {
      Json c;
      c["name"] = claim.name;
      c["expected"] = claim.expected;
      c["actual"] = claim.actual;
      c["pass"] = claim.pass;
      claims.push_back(std::move(c));
    }
    entry["claims"] = std::move(claims);
    items.push_back(std::move(entry));
  }
  doc["items"] = std::move(items);
  return doc;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  std::size_t claim_count = 0;
  for (const ReportItem& item : report.items) {
    claim_count += item.claims.size();
    out << (item.pass() ? "[pass] " : "[FAIL] ") << item.id;
    if (!item.params.empty()) {
      out << "  (";
      bool first = true;
      for (const auto& [key, value] : item.params) {
        if (!first) out << ", ";
        out << key << "=" << value;
        first = false;
      }
      out << ")";
    }
    out << '\n';
    for (const Claim& claim : item.claims) {
      if (!claim.pass) {
        out << "       claim '" << claim.name << "': expected "
            << claim.expected << ", got " << claim.actual << '\n';
      }
    }
  }
  out << "suite " << report.suite << ": " << (report.pass() ? "PASS" : "FAIL")
      << "  items=" << report.items.size() << " claims=" << claim_count
      << " seed=" << report.seed << '\n';
  return out.str();
}

std::string render_tsv(const Report& report) {
  std::ostringstream out;
  out << "suite\titem\tclaim\texpected\tactual\tpass\n";
  for (const ReportItem& item : report.items) {
    for (const Claim& claim : item.claims) {
      out << report.suite << '\t' << item.id << '\t' << claim.name << '\t'
          << claim.expected << '\t' << claim.actual << '\t'
          << (claim.pass ? "pass" : "fail") << '\n';
    }
  }
  return out.str();
}

namespace {

void flatten_into(const Json& node, const std::string& path,
                  std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten_into(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    std::size_t index = 0;
    for (const auto& value : node) {
      flatten_into(value, path + "[" + std::to_string(index) + "]", out);
      ++index;
    }
  } else {
    out << path << '\t' << (node.is_string() ? node.get<std::string>()
                                             : node.dump())
        << '\n';
  }
}

}  // namespace

std::string flatten_tsv(const Json& doc) {
  std::ostringstream out;
  flatten_into(doc, "", out);
  return out.str();
}

}  // namespace regulib::tools
