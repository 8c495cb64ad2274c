// SPDX-License-Identifier: MIT

#include "construct.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "regulib/classical.hpp"
#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"
#include "regulib/reptable.hpp"
#include "regulib/torusnorm.hpp"

namespace regulib::tools {
namespace {

unsigned require(const std::optional<unsigned>& value, const char* flag) {
  if (!value.has_value()) {
    throw std::invalid_argument(std::string("missing required flag --") +
                                flag);
  }
  return *value;
}

Json header(const std::string& construction, Json params) {
  Json doc;
  doc["schema"] = "regulib-report/1";
  doc["kind"] = "construct";
  doc["construction"] = construction;
  doc["params"] = std::move(params);
  return doc;
}

Json torus_datum_json(const std::string& construction, Json params,
                      const TorusNormalizerDatum& datum) {
  Json doc = header(construction, std::move(params));
  doc["builder"] = datum.construction;
  doc["builder_params"] = datum.params;
  doc["p"] = datum.torus.field().characteristic();
  doc["dim"] = datum.torus.dim();
  doc["ambient_form"] = form_json(datum.ambient_form);
  doc["torus_rank"] = datum.torus.rank();
  Json weights = Json::array();
  for (const auto& w : datum.torus.weights()) {
    Json row = Json::array();
    for (long long x : w) row.push_back(x);
    weights.push_back(std::move(row));
  }
  doc["weights"] = std::move(weights);
  Json dims = Json::array();
  for (const auto& [weight, basis] : weight_spaces(datum.torus)) {
    dims.push_back(basis.dim());
  }
  doc["weight_dims"] = std::move(dims);
  doc["u"] = matrix_json(datum.u);
  doc["jordan_type"] = partition_string(jordan_type(datum.u));
  try {
    const TorusCaseReport report = classify_torus_case(datum);
    Json c;
    c["tag"] = report.case_tag;
    c["common_weight_dim"] = report.common_weight_dim;
    c["orbit_sizes"] = report.orbit_sizes;
    c["zero_weight_dim"] = report.zero_weight_dim;
    doc["case"] = std::move(c);
  } catch (const std::exception&) {
    doc["case"] = nullptr;
  }
  doc["witness"] = witness_json(containment_witness(datum));
  return doc;
}

Json regular_rep_json(const std::string& construction, Json params,
                      const RegularRep& rep) {
  Json doc = header(construction, std::move(params));
  doc["group"] = to_string(rep.group_tag);
  doc["p"] = rep.p;
  doc["dim"] = rep.u.rows();
  doc["form"] = form_json(rep.space);
  doc["u"] = matrix_json(rep.u);
  doc["jordan_type"] = partition_string(jordan_type(rep.u));
  doc["expected_type"] = partition_string(rep.expected_type);
  if (rep.space.has_value() && rep.p == 2) {
    if (const auto* quad = std::get_if<QuadSpace>(&*rep.space)) {
      doc["dickson"] = dickson(rep.u, *quad);
    }
  }
  return doc;
}

Json rep_datum_json(const std::string& construction, Json params,
                    const RepDatum& datum) {
  Json doc = header(construction, std::move(params));
  doc["row_tag"] = datum.row_tag;
  doc["p"] = datum.p;
  doc["dim"] = datum.dim;
  doc["order_bound"] = datum.order_bound;
  const auto ord = matrix_order(datum.u, datum.order_bound);
  doc["order"] = ord.has_value() ? Json(*ord) : Json(nullptr);
  doc["jordan_type"] = partition_string(jordan_type(datum.u));
  doc["u"] = matrix_json(datum.u);
  Json gens = Json::array();
  for (const Matrix& g : datum.generators) gens.push_back(matrix_json(g));
  doc["generators"] = std::move(gens);
  return doc;
}

using ConstructFn = Json (*)(const ConstructOptions&);

Json make_sl_wreath(const ConstructOptions& o) {
  const unsigned p = require(o.p, "p");
  const unsigned a = require(o.a, "a");
  const unsigned d = require(o.d, "d");
  return torus_datum_json("sl-wreath", Json{{"p", p}, {"a", a}, {"d", d}},
                          sl_wreath(p, a, d));
}

Json make_go_wreath(const ConstructOptions& o) {
  const unsigned m = require(o.m, "m");
  const unsigned f = require(o.f, "f");
  return torus_datum_json("go-wreath", Json{{"m", m}, {"f", f}},
                          go_wreath(m, f));
}

Json make_so_pair_stab(const ConstructOptions& o) {
  const unsigned l = require(o.l, "l");
  return torus_datum_json("so-pair-stab", Json{{"l", l}}, so_pair_stab(l));
}

Json make_so_orthsum(const ConstructOptions& o) {
  const unsigned l = require(o.l, "l");
  return torus_datum_json("so-orthsum", Json{{"l", l}}, so_orthsum(l));
}

Json make_sl4_wedge(const ConstructOptions&) {
  return torus_datum_json("sl4-wedge", Json::object(), sl4_wedge());
}

Json make_gl_stab_outer(const ConstructOptions& o) {
  const unsigned l = require(o.l, "l");
  return regular_rep_json("gl-stab-outer", Json{{"l", l}, {"p", 2}},
                          gl_stab_outer(l, 2));
}

Json make_go_outer(const ConstructOptions& o) {
  const unsigned l = require(o.l, "l");
  return regular_rep_json("go-outer", Json{{"l", l}, {"p", 2}},
                          go_outer_regular(2 * l, 2));
}

Json make_sym_power(const ConstructOptions& o) {
  const unsigned m = require(o.m, "m");
  const unsigned p = require(o.p, "p");
  return rep_datum_json("sym-power", Json{{"m", m}, {"p", p}},
                        sym_power_rep(m, p));
}

template <RepFamily Family>
Json make_natural(const ConstructOptions& o) {
  const unsigned l = require(o.l, "l");
  const unsigned p = Family == RepFamily::D2 ? o.p.value_or(2)
                                             : require(o.p, "p");
  const char* name = Family == RepFamily::A    ? "natural-a"
                     : Family == RepFamily::B  ? "natural-b"
                     : Family == RepFamily::C  ? "natural-c"
                                               : "natural-d2";
  return rep_datum_json(name, Json{{"l", l}, {"p", p}},
                        natural_rep(Family, l, p));
}

Json make_g2(const ConstructOptions& o) {
  const unsigned p = require(o.p, "p");
  return rep_datum_json("g2", Json{{"p", p}}, g2_rep(p));
}

Json make_a2_adjoint_outer(const ConstructOptions& o) {
  const unsigned p = o.p.value_or(2);
  return rep_datum_json("a2-adjoint-outer", Json{{"p", p}},
                        a2_adjoint_outer(p));
}

Json make_tensor_wreath(const ConstructOptions& o) {
  const unsigned p = require(o.p, "p");
  return rep_datum_json("tensor-wreath", Json{{"p", p}}, tensor_wreath(p));
}

Json make_tensor_swap9(const ConstructOptions&) {
  return rep_datum_json("tensor-swap9", Json::object(), tensor_swap9());
}

Json make_al2_outer_probe(const ConstructOptions& o) {
  const unsigned l_max = require(o.l, "l");
  Json doc = header("al2-outer-probe", Json{{"l", l_max}});
  Json rows = Json::array();
  for (const OuterProbeRow& row : al2_outer_probe(l_max)) {
    Json entry;
    entry["l"] = row.l;
    entry["subspace_found"] = row.subspace_found;
    entry["subspace_dim"] = row.subspace_dim;
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json make_cyclotomic(const ConstructOptions& o) {
  const unsigned p = require(o.p, "p");
  const unsigned a = require(o.a, "a");
  Json doc = header("cyclotomic-companion", Json{{"p", p}, {"a", a}});
  const IntMatrix m = cyclotomic_companion(p, a);
  doc["size"] = m.size();
  doc["min_torus_dim"] = min_torus_dim_for_order(p, a);
  doc["matrix"] = int_matrix_json(m);
  const auto ord = integer_matrix_order(m, o.cap);
  doc["integer_order"] = ord.has_value() ? Json(*ord) : Json(nullptr);
  return doc;
}

const std::map<std::string, ConstructFn>& registry() {
  static const std::map<std::string, ConstructFn> map = {
      {"sl-wreath", make_sl_wreath},
      {"go-wreath", make_go_wreath},
      {"so-pair-stab", make_so_pair_stab},
      {"so-orthsum", make_so_orthsum},
      {"sl4-wedge", make_sl4_wedge},
      {"gl-stab-outer", make_gl_stab_outer},
      {"go-outer", make_go_outer},
      {"sym-power", make_sym_power},
      {"natural-a", make_natural<RepFamily::A>},
      {"natural-b", make_natural<RepFamily::B>},
      {"natural-c", make_natural<RepFamily::C>},
      {"natural-d2", make_natural<RepFamily::D2>},
      {"g2", make_g2},
      {"a2-adjoint-outer", make_a2_adjoint_outer},
      {"tensor-wreath", make_tensor_wreath},
      {"tensor-swap9", make_tensor_swap9},
      {"al2-outer-probe", make_al2_outer_probe},
      {"cyclotomic-companion", make_cyclotomic},
  };
  return map;
}

}  // namespace

const std::vector<std::string>& construction_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Json run_construct(const std::string& construction_id,
                   const ConstructOptions& options) {
  const auto& map = registry();
  const auto found = map.find(construction_id);
  if (found == map.end()) {
    throw std::invalid_argument("unknown construction: " + construction_id);
  }
  return found->second(options);
}

}  // namespace regulib::tools
