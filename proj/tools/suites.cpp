// SPDX-License-Identifier: MIT

#include "suites.hpp"

#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "regulib/classical.hpp"
#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"
#include "regulib/modstruct.hpp"
#include "regulib/reptable.hpp"
#include "regulib/torusnorm.hpp"

namespace regulib::tools {
namespace {

using Params = std::vector<std::pair<std::string, long long>>;
using ItemJob = std::function<ReportItem()>;

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

/// Wraps an item body so an exception becomes a failing claim instead of
/// tearing down the whole suite (or a worker thread).
ItemJob guarded(std::string id, Params params,
                std::function<void(ReportItem&)> body) {
  return [id = std::move(id), params = std::move(params),
          body = std::move(body)]() {
    ReportItem item{id, params, {}};
    try {
      body(item);
    } catch (const std::exception& e) {
      item.claims.push_back(
          claim_rel("construction", "no exception", e.what(), false));
    }
    return item;
  };
}

/// Executes the jobs on up to `jobs_n` workers (0 = hardware concurrency)
/// and returns results in job order.
std::vector<ReportItem> run_jobs(const std::vector<ItemJob>& jobs,
                                 unsigned jobs_n) {
  std::vector<ReportItem> results(jobs.size());
  if (jobs.empty()) return results;
  unsigned workers = jobs_n != 0 ? jobs_n : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > jobs.size()) workers = static_cast<unsigned>(jobs.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      results[i] = jobs[i]();
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return results;
}

std::vector<unsigned> primes_in_scope(const SuiteOptions& options,
                                      std::vector<unsigned> defaults) {
  if (!options.p.has_value()) return defaults;
  return {*options.p};
}

template <typename T>
bool matches(const std::optional<T>& filter, T value) {
  return !filter.has_value() || *filter == value;
}

Matrix block_diag(const FieldPrime& f, const JordanType& type) {
  Matrix u = Matrix::identity(f, 0);
  for (unsigned b : type.blocks()) {
    u = direct_sum(u, jordan_block(f, b));
  }
  return u;
}

std::string type_string(const Matrix& u) {
  return partition_string(jordan_type(u));
}

// ---------------------------------------------------------------------------
// Shared catalogue rows (used by both the table suite and the main-theorem
// suite).
// ---------------------------------------------------------------------------

enum class OrderKind { Exact, Strict, Inclusive };

struct CatalogueRow {
  std::string id;
  Params params;
  OrderKind order_kind;
  std::function<RepDatum()> make;
};

std::vector<CatalogueRow> table_rows(const SuiteOptions& options) {
  std::vector<CatalogueRow> rows;
  const auto add = [&rows](std::string id, Params params, OrderKind kind,
                           std::function<RepDatum()> make) {
    rows.push_back(
        {std::move(id), std::move(params), kind, std::move(make)});
  };

  for (const auto& [m, p] : {std::pair<unsigned, unsigned>{1, 2}, {2, 3},
                             {4, 5}}) {
    if (!matches(options.p, p) || !matches(options.m, m)) continue;
    add("A1:sym:" + str(m) + ":" + str(p), {{"m", m}, {"p", p}},
        OrderKind::Exact, [m = m, p = p] { return sym_power_rep(m, p); });
  }
  for (unsigned l = 1; l <= 4; ++l) {
    for (unsigned p : {2u, 3u}) {
      if (!matches(options.p, p) || !matches(options.l, l)) continue;
      add("Al:nat:" + str(l) + ":" + str(p), {{"l", l}, {"p", p}},
          OrderKind::Strict,
          [l, p] { return natural_rep(RepFamily::A, l, p); });
    }
  }
  for (unsigned l = 2; l <= 4; ++l) {
    if (matches(options.p, 3u) && matches(options.l, l)) {
      add("Bl:nat:" + str(l) + ":3", {{"l", l}, {"p", 3}}, OrderKind::Strict,
          [l] { return natural_rep(RepFamily::B, l, 3); });
    }
    for (unsigned p : {2u, 3u}) {
      if (!matches(options.p, p) || !matches(options.l, l)) continue;
      add("Cl:nat:" + str(l) + ":" + str(p), {{"l", l}, {"p", p}},
          OrderKind::Strict,
          [l, p] { return natural_rep(RepFamily::C, l, p); });
    }
  }
  for (unsigned l = 3; l <= 4; ++l) {
    if (!matches(options.p, 2u) || !matches(options.l, l)) continue;
    add("Dl.2:nat:" + str(l) + ":2", {{"l", l}, {"p", 2}}, OrderKind::Strict,
        [l] { return natural_rep(RepFamily::D2, l, 2); });
  }
  if (matches(options.p, 3u)) {
    add("G2:7:3", {{"p", 3}}, OrderKind::Inclusive, [] { return g2_rep(3); });
  }
  if (matches(options.p, 2u)) {
    add("G2:6:2", {{"p", 2}}, OrderKind::Exact, [] { return g2_rep(2); });
    add("A2.2:adj:2", {{"p", 2}}, OrderKind::Exact,
        [] { return a2_adjoint_outer(2); });
  }
  return rows;
}

std::vector<CatalogueRow> lemma27_rows(const SuiteOptions& options) {
  std::vector<CatalogueRow> rows;
  for (unsigned p : {2u, 3u}) {
    if (!matches(options.p, p)) continue;
    rows.push_back({"L2.7(2):" + str(p),
                    Params{{"p", p}},
                    OrderKind::Exact,
                    [p] { return tensor_wreath(p); }});
  }
  if (matches(options.p, 2u)) {
    rows.push_back({"L2.7(3)", Params{{"p", 2}}, OrderKind::Exact,
                    [] { return tensor_swap9(); }});
  }
  return rows;
}

void check_order_claim(ReportItem& item, const RepDatum& datum,
                       OrderKind kind) {
  const auto ord = matrix_order(datum.u, datum.order_bound);
  const std::string actual =
      ord.has_value() ? str(*ord) : "> " + str(datum.order_bound);
  switch (kind) {
    case OrderKind::Exact:
      item.claims.push_back(
          claim_eq("order", str(datum.order_bound), actual));
      break;
    case OrderKind::Strict:
      item.claims.push_back(
          claim_rel("order", "< " + str(datum.order_bound), actual,
                    ord.has_value() && *ord < datum.order_bound));
      break;
    case OrderKind::Inclusive:
      item.claims.push_back(
          claim_rel("order", "<= " + str(datum.order_bound), actual,
                    ord.has_value()));
      break;
  }
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

Report suite_lemma_2_3(const SuiteOptions& options) {
  const unsigned max_n = options.max_n.value_or(24);
  std::vector<ItemJob> jobs;
  for (unsigned p : primes_in_scope(options, {2, 3, 5, 7})) {
    jobs.push_back(guarded(
        "jordan-power p=" + str(p), {{"p", p}, {"max_n", max_n}},
        [p, max_n](ReportItem& item) {
          const FieldPrime f(p);
          for (unsigned n = 1; n <= max_n; ++n) {
            const auto partitions = all_partitions(n);
            std::size_t agreements = 0;
            std::string mismatch;
            for (const JordanType& t : partitions) {
              const JordanType oracle = jordan_power(t, p);
              const JordanType viaMatrix =
                  jordan_type(block_diag(f, t).pow(p));
              if (oracle == viaMatrix) {
                ++agreements;
              } else if (mismatch.empty()) {
                mismatch = partition_string(t) + ": oracle " +
                           partition_string(oracle) + " vs matrix " +
                           partition_string(viaMatrix);
              }
            }
            const std::string want = str(partitions.size()) + " agree";
            item.claims.push_back(claim_eq(
                "n=" + str(n), want,
                mismatch.empty() ? want : "mismatch at " + mismatch));
          }
        }));
  }
  return Report{"lemma-2.3", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_lemma_2_4(const SuiteOptions& options) {
  const unsigned max_n = options.max_n.value_or(16);
  std::vector<ItemJob> jobs;
  for (unsigned p : primes_in_scope(options, {2, 3, 5})) {
    jobs.push_back(guarded(
        "tensor-pairs p=" + str(p), {{"p", p}, {"max_n", max_n}},
        [p, max_n](ReportItem& item) {
          const FieldPrime f(p);
          for (unsigned a = 2; a * a <= max_n; ++a) {
            for (unsigned b = a; a * b <= max_n; ++b) {
              const unsigned n = a * b;
              const JordanType type = jordan_type(
                  kronecker(jordan_block(f, a), jordan_block(f, b)));
              const JordanType oracle = jordan_tensor(
                  JordanType(std::vector<unsigned>{a}),
                  JordanType(std::vector<unsigned>{b}), p);
              const std::string label =
                  "[" + str(a) + "]x[" + str(b) + "]";
              item.claims.push_back(claim_eq(label + " oracle",
                                             partition_string(type),
                                             partition_string(oracle)));

              const std::vector<JordanType> nearRegular = {
                  JordanType(std::vector<unsigned>{n}),
                  JordanType(std::vector<unsigned>{n - 1, 1}),
                  JordanType(std::vector<unsigned>{n - 2, 2})};
              bool isNear = false;
              for (const JordanType& c : nearRegular) {
                if (type == c) isNear = true;
              }
              const bool expectNear = (a == 2 && b == 2);
              item.claims.push_back(claim_rel(
                  label + " near-regular", expectNear ? "yes" : "no",
                  (isNear ? "yes (type " : "no (type ") +
                      partition_string(type) + ")",
                  isNear == expectNear));
              if (p == 2 && a == 2 && b == 2) {
                item.claims.push_back(claim_eq(label + " type over GF(2)",
                                               "2+2",
                                               partition_string(type)));
              }
            }
          }
        }));
  }
  return Report{"lemma-2.4", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_lemma_2_7(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  for (unsigned p : {2u, 3u}) {
    if (!matches(options.p, p)) continue;
    jobs.push_back(guarded(
        "L2.7(2):" + str(p), {{"p", p}}, [p](ReportItem& item) {
          const RepDatum d = tensor_wreath(p);
          item.claims.push_back(claim_eq("jordan type",
                                         str(1u << p),
                                         partition_string(jordan_type(d.u))));
          check_order_claim(item, d, OrderKind::Exact);
        }));
  }
  if (matches(options.p, 2u)) {
    jobs.push_back(guarded("L2.7(3)", {{"p", 2}}, [](ReportItem& item) {
      const RepDatum d = tensor_swap9();
      item.claims.push_back(
          claim_eq("jordan type", "8+1", partition_string(jordan_type(d.u))));
      item.claims.push_back(claim_eq(
          "square type", "4+4+1", partition_string(jordan_type(d.u * d.u))));
      check_order_claim(item, d, OrderKind::Exact);
    }));
  }
  return Report{"lemma-2.7", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_lemma_2_8(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;

  for (unsigned p : primes_in_scope(options, {2, 3})) {
    jobs.push_back(guarded(
        "special-linear p=" + str(p), {{"p", p}}, [p](ReportItem& item) {
          for (unsigned n = 2; n <= 8; ++n) {
            const RegularRep rep = regular_in_sl(n, p);
            item.claims.push_back(
                claim_eq("SL n=" + str(n), str(n), type_string(rep.u)));
          }
        }));
    jobs.push_back(guarded(
        "symplectic p=" + str(p), {{"p", p}}, [p](ReportItem& item) {
          for (unsigned l = 2; l <= 5; ++l) {
            const RegularRep rep = regular_in_sp(2 * l, p);
            item.claims.push_back(
                claim_eq("Sp l=" + str(l), str(2 * l), type_string(rep.u)));
            const auto& space = std::get<SympSpace>(*rep.space);
            item.claims.push_back(claim_eq("Sp l=" + str(l) + " isometry",
                                           "true",
                                           is_isometry(rep.u, space)
                                               ? "true"
                                               : "false"));
          }
        }));
  }

  if (matches(options.p, 3u)) {
    jobs.push_back(guarded(
        "odd-orthogonal p=3", {{"p", 3}}, [](ReportItem& item) {
          for (unsigned l = 2; l <= 5; ++l) {
            const RegularRep rep = regular_in_so(2 * l + 1, 3);
            item.claims.push_back(claim_eq("SO dim=" + str(2 * l + 1),
                                           str(2 * l + 1),
                                           type_string(rep.u)));
          }
        }));
    jobs.push_back(guarded(
        "even-orthogonal p=3", {{"p", 3}}, [](ReportItem& item) {
          for (unsigned l = 3; l <= 5; ++l) {
            const RegularRep rep = regular_in_so(2 * l, 3);
            item.claims.push_back(claim_eq("SO dim=" + str(2 * l),
                                           str(2 * l - 1) + "+1",
                                           type_string(rep.u)));
          }
        }));
  }
  if (matches(options.p, 2u)) {
    jobs.push_back(guarded(
        "even-orthogonal p=2", {{"p", 2}}, [](ReportItem& item) {
          for (unsigned l = 3; l <= 5; ++l) {
            const RegularRep rep = regular_in_so(2 * l, 2);
            item.claims.push_back(claim_eq("SO dim=" + str(2 * l),
                                           str(2 * l - 2) + "+2",
                                           type_string(rep.u)));
            const auto& space = std::get<QuadSpace>(*rep.space);
            item.claims.push_back(claim_eq("SO dim=" + str(2 * l) + " dickson",
                                           "0", str(dickson(rep.u, space))));
          }
        }));
    jobs.push_back(guarded(
        "orthogonal-outer p=2", {{"p", 2}}, [](ReportItem& item) {
          for (unsigned l = 2; l <= 5; ++l) {
            const RegularRep rep = go_outer_regular(2 * l, 2);
            item.claims.push_back(claim_eq("GO l=" + str(l), str(2 * l),
                                           type_string(rep.u)));
            const auto& space = std::get<QuadSpace>(*rep.space);
            item.claims.push_back(claim_eq("GO l=" + str(l) + " dickson", "1",
                                           str(dickson(rep.u, space))));
          }
        }));
    jobs.push_back(guarded(
        "pair-stabilizer-outer p=2", {{"p", 2}}, [](ReportItem& item) {
          for (unsigned l = 3; l <= 5; ++l) {
            const RegularRep rep = gl_stab_outer(l, 2);
            const std::string expected =
                l % 2 == 1 ? str(2 * l) : str(2 * l - 2) + "+2";
            item.claims.push_back(claim_eq("GL.2 l=" + str(l), expected,
                                           type_string(rep.u)));
          }
        }));
  }
  return Report{"lemma-2.8", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_table_1(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  for (const CatalogueRow& row : table_rows(options)) {
    jobs.push_back(guarded(row.id, row.params, [row](ReportItem& item) {
      const RepDatum d = row.make();
      item.claims.push_back(claim_eq("row tag", row.id, d.row_tag));
      item.claims.push_back(claim_eq("jordan type", str(d.dim),
                                     partition_string(jordan_type(d.u))));
      check_order_claim(item, d, row.order_kind);
      const auto irr = is_absolutely_irreducible(ModuleAction(d.generators));
      item.claims.push_back(
          claim_eq("absolutely irreducible", "true",
                   irr.absolutely_irreducible() ? "true" : "false"));
    }));
  }
  return Report{"table-1", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_prop_6_1(const SuiteOptions& options) {
  const unsigned max_n = options.max_n.value_or(16);
  std::vector<ItemJob> jobs;
  for (unsigned p : primes_in_scope(options, {2, 3})) {
    unsigned pa = p;
    for (unsigned a = 1; pa <= max_n; ++a, pa *= p) {
      for (unsigned d = 1; pa * d <= max_n; ++d) {
        if (!matches(options.a, a) || !matches(options.d, d)) continue;
        jobs.push_back(guarded(
            "sl-wreath p=" + str(p) + " a=" + str(a) + " d=" + str(d),
            {{"p", p}, {"a", a}, {"d", d}},
            [p, a, d, pa](ReportItem& item) {
              const TorusNormalizerDatum datum = sl_wreath(p, a, d);
              item.claims.push_back(
                  claim_eq("jordan type", str(pa * d),
                           partition_string(jordan_type(datum.u))));
              item.claims.push_back(claim_eq("torus rank", str(pa - 1),
                                             str(datum.torus.rank())));
              const auto spaces = weight_spaces(datum.torus);
              bool uniform = spaces.size() == pa;
              for (const auto& [weight, basis] : spaces) {
                if (basis.dim() != d) uniform = false;
              }
              item.claims.push_back(claim_rel(
                  "weight spaces", str(pa) + " of dimension " + str(d),
                  str(spaces.size()) + " spaces", uniform));
              const auto witness = containment_witness(datum);
              item.claims.push_back(claim_eq(
                  "parabolic witness", d > 1 ? "present" : "absent",
                  witness.has_value() ? "present" : "absent"));
            }));
      }
    }
  }
  return Report{"prop-6.1", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_example_6_4(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  for (const auto& [m, f] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1},
                             {3, 2}}) {
    if (!matches(options.m, m) || !matches(options.f, f)) continue;
    jobs.push_back(guarded(
        "go-wreath m=" + str(m) + " f=" + str(f), {{"m", m}, {"f", f}},
        [m = m, f = f](ReportItem& item) {
          const TorusNormalizerDatum datum = go_wreath(m, f);
          const unsigned long long q = 1ULL << (f + 1);
          const unsigned n = static_cast<unsigned>(q) * m;
          item.claims.push_back(claim_eq(
              "jordan type", str(n), partition_string(jordan_type(datum.u))));
          const Matrix power = datum.u.pow(q);
          item.claims.push_back(claim_rel(
              "u^" + str(q) + " nontrivial", "true",
              power.is_identity() ? "false" : "true", !power.is_identity()));
          item.claims.push_back(
              claim_eq("u^" + str(q) + " centralizes torus", "true",
                       centralizes_torus(power, datum.torus) ? "true"
                                                             : "false"));
          const auto witness = containment_witness(datum);
          item.claims.push_back(
              claim_eq("parabolic witness", "present",
                       witness.has_value() ? "present" : "absent"));
        }));
  }
  return Report{"example-6.4", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_example_6_6(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  for (unsigned l : {4u, 6u}) {
    if (!matches(options.l, l)) continue;
    jobs.push_back(guarded(
        "so-pair-stab l=" + str(l), {{"l", l}}, [l](ReportItem& item) {
          const TorusNormalizerDatum datum = so_pair_stab(l);
          const TorusCaseReport report = classify_torus_case(datum);
          item.claims.push_back(
              claim_eq("case", "1", str(report.case_tag)));
          item.claims.push_back(
              claim_eq("jordan type", str(2 * l - 2) + "+2",
                       partition_string(jordan_type(datum.u))));

          const FieldPrime& f = datum.u.field();
          const Matrix square = datum.u * datum.u;
          for (unsigned half = 0; half < 2; ++half) {
            Matrix basis(f, l, 2 * l);
            for (unsigned i = 0; i < l; ++i) {
              basis.set(i, half * l + i, 1);
            }
            const Matrix restricted =
                restrict_to_invariant(square, SubspaceBasis(basis));
            item.claims.push_back(claim_eq(
                "u^2 on half " + str(half + 1), str(l - 1) + "+1",
                partition_string(jordan_type(restricted))));
          }
        }));
  }
  return Report{"example-6.6", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_prop_6_7(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  if (matches(options.l, 5u)) {
    jobs.push_back(guarded(
        "so-orthsum l=5", {{"l", 5}}, [](ReportItem& item) {
          const TorusNormalizerDatum datum = so_orthsum(5);
          const TorusCaseReport report = classify_torus_case(datum);
          item.claims.push_back(claim_eq("case", "2", str(report.case_tag)));
          item.claims.push_back(
              claim_eq("zero-weight dimension", "2",
                       str(report.zero_weight_dim)));
        }));
  }
  if (matches(options.l, 4u) || !options.l.has_value()) {
    jobs.push_back(guarded(
        "sl4-wedge", {}, [](ReportItem& item) {
          const TorusNormalizerDatum datum = sl4_wedge();
          const TorusCaseReport report = classify_torus_case(datum);
          item.claims.push_back(claim_eq("case", "3", str(report.case_tag)));
          std::string dims;
          for (const auto& [weight, basis] : weight_spaces(datum.torus)) {
            if (!dims.empty()) dims += ",";
            dims += str(basis.dim());
          }
          item.claims.push_back(claim_eq("weight dimensions", "1,4,1", dims));
        }));
  }
  return Report{"prop-6.7", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_prop_7_1(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;
  for (const auto& [p, a] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2},
                             {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1},
                             {7, 1}}) {
    if (!matches(options.p, p) || !matches(options.a, a)) continue;
    jobs.push_back(guarded(
        "cyclotomic p=" + str(p) + " a=" + str(a), {{"p", p}, {"a", a}},
        [p = p, a = a, cap = options.cap](ReportItem& item) {
          const IntMatrix m = cyclotomic_companion(p, a);
          item.claims.push_back(claim_eq(
              "companion size", str(min_torus_dim_for_order(p, a)),
              str(m.size())));
          unsigned long long target = 1;
          for (unsigned k = 0; k < a; ++k) target *= p;
          const auto ord = integer_matrix_order(m, cap);
          item.claims.push_back(claim_eq(
              "integer order", str(target),
              ord.has_value() ? str(*ord) : "> " + str(cap)));
        }));
  }
  return Report{"prop-7.1", options.seed, 0, run_jobs(jobs, options.jobs)};
}

Report suite_theorem_a(const SuiteOptions& options) {
  std::vector<ItemJob> jobs;

  // Groups with a nontrivial semisimple part containing their
  // distinguished unipotent: no parabolic containment may be visible.
  std::vector<CatalogueRow> rows = table_rows(options);
  for (CatalogueRow& row : lemma27_rows(options)) {
    rows.push_back(std::move(row));
  }
  for (const CatalogueRow& row : rows) {
    jobs.push_back(guarded(row.id, row.params, [row](ReportItem& item) {
      const RepDatum d = row.make();
      std::vector<Matrix> group = d.generators;
      group.push_back(d.u);
      const auto witness = parabolic_witness(group, std::nullopt);
      item.claims.push_back(
          claim_eq("parabolic witness", "absent",
                   witness.has_value() ? "present" : "absent"));
    }));
  }

  // Torus-normalizer data from the reducible families: a witness must be
  // found whenever the weight multiplicity d exceeds 1, and for the
  // wreath / pair-stabilizer / wedge families.
  const auto expect_present = [&jobs](std::string id, Params params,
                                      std::function<TorusNormalizerDatum()>
                                          make) {
    jobs.push_back(guarded(
        std::move(id), std::move(params),
        [make = std::move(make)](ReportItem& item) {
          const auto witness = containment_witness(make());
          item.claims.push_back(
              claim_eq("containment witness", "present",
                       witness.has_value() ? "present" : "absent"));
        }));
  };

  const unsigned max_n = options.max_n.value_or(16);
  for (unsigned p : primes_in_scope(options, {2, 3})) {
    unsigned pa = p;
    for (unsigned a = 1; pa <= max_n; ++a, pa *= p) {
      for (unsigned d = 2; pa * d <= max_n; ++d) {
        expect_present(
            "sl-wreath p=" + str(p) + " a=" + str(a) + " d=" + str(d),
            {{"p", p}, {"a", a}, {"d", d}},
            [p, a, d] { return sl_wreath(p, a, d); });
      }
    }
  }
  for (const auto& [m, f] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1},
                             {3, 2}}) {
    expect_present("go-wreath m=" + str(m) + " f=" + str(f),
                   {{"m", m}, {"f", f}},
                   [m = m, f = f] { return go_wreath(m, f); });
  }
  for (unsigned l : {4u, 6u}) {
    expect_present("so-pair-stab l=" + str(l), {{"l", l}},
                   [l] { return so_pair_stab(l); });
  }
  expect_present("sl4-wedge", {}, [] { return sl4_wedge(); });

  return Report{"theorem-A", options.seed, 0, run_jobs(jobs, options.jobs)};
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "lemma-2.3",   "lemma-2.4", "lemma-2.7",   "lemma-2.8",
      "table-1",     "prop-6.1",  "example-6.4", "example-6.6",
      "prop-6.7",    "prop-7.1",  "theorem-A"};
  return ids;
}

Report run_suite(const std::string& suite_id, const SuiteOptions& options) {
  using SuiteFn = Report (*)(const SuiteOptions&);
  static const std::map<std::string, SuiteFn> registry = {
      {"lemma-2.3", suite_lemma_2_3},
      {"lemma-2.4", suite_lemma_2_4},
      {"lemma-2.7", suite_lemma_2_7},
      {"lemma-2.8", suite_lemma_2_8},
      {"table-1", suite_table_1},
      {"prop-6.1", suite_prop_6_1},
      {"example-6.4", suite_example_6_4},
      {"example-6.6", suite_example_6_6},
      {"prop-6.7", suite_prop_6_7},
      {"prop-7.1", suite_prop_7_1},
      {"theorem-A", suite_theorem_a},
  };
  const auto found = registry.find(suite_id);
  if (found == registry.end()) {
    throw std::invalid_argument("unknown suite: " + suite_id);
  }
  return found->second(options);
}

}  // namespace regulib::tools
