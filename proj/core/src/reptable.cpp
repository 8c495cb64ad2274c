// SPDX-License-Identifier: MIT

#include "regulib/reptable.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "g2data.hpp"
#include "regulib/classical.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"
#include "regulib/modstruct.hpp"

namespace regulib {

std::string to_string(RepFamily family) {
  switch (family) {
    case RepFamily::A:
      return "Al";
    case RepFamily::B:
      return "Bl";
    case RepFamily::C:
      return "Cl";
    case RepFamily::D2:
      return "Dl.2";
  }
  throw std::invalid_argument("to_string(RepFamily): unknown family");
}

namespace {

[[nodiscard]] JordanType single_block(unsigned n) {
  return JordanType(std::vector<unsigned>{n});
}

/// Validates jordan_type(u) == want and returns the exact order of u,
/// which must exist within `cap`.
unsigned long long require_type_and_order(const Matrix& u,
                                          const JordanType& want,
                                          unsigned long long cap,
                                          const std::string& row_tag) {
  if (!is_unipotent(u) || !(jordan_type(u) == want)) {
    throw std::runtime_error("reptable: row " + row_tag +
                             " failed its Jordan-type check");
  }
  const std::optional<unsigned long long> ord = matrix_order(u, cap);
  if (!ord.has_value()) {
    throw std::runtime_error("reptable: row " + row_tag +
                             " has order beyond its stated bound");
  }
  return *ord;
}

/// I + E_{ij} over f, the elementary transvection.
[[nodiscard]] Matrix transvection(const FieldPrime& f, std::size_t n,
                                  std::size_t i, std::size_t j) {
  Matrix t = Matrix::identity(f, n);
  t.set(i, j, 1);
  return t;
}

/// Both SL_n transvection chains I + E_{i,i+1} and I + E_{i+1,i}.
[[nodiscard]] std::vector<Matrix> sl_transvections(const FieldPrime& f,
                                                   std::size_t n) {
  std::vector<Matrix> gens;
  gens.reserve(2 * (n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(transvection(f, n, i, i + 1));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(transvection(f, n, i + 1, i));
  }
  return gens;
}

/// Reduces a frozen integer matrix into GF(p).
template <std::size_t N>
[[nodiscard]] Matrix reduce_mod(const FieldPrime& f,
                                const std::array<std::array<int, N>, N>& a) {
  Matrix m(f, N, N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      m.set(i, j, a[i][j]);
    }
  }
  return m;
}

/// Coordinates of a trace-zero 3x3 matrix over GF(2) in the basis
/// E01, E02, E10, E12, E20, E21, diag(1,1,0), diag(0,1,1).
[[nodiscard]] std::array<unsigned, 8> trace_zero_coords(const Matrix& m) {
  const unsigned d0 = static_cast<unsigned>(m.at(0, 0));
  const unsigned d1 = static_cast<unsigned>(m.at(1, 1));
  const unsigned d2 = static_cast<unsigned>(m.at(2, 2));
  if (((d0 + d1 + d2) & 1U) != 0) {
    throw std::logic_error("trace_zero_coords: matrix has nonzero trace");
  }
  return {static_cast<unsigned>(m.at(0, 1)), static_cast<unsigned>(m.at(0, 2)),
          static_cast<unsigned>(m.at(1, 0)), static_cast<unsigned>(m.at(1, 2)),
          static_cast<unsigned>(m.at(2, 0)), static_cast<unsigned>(m.at(2, 1)),
          d0, d2};
}

/// The trace-zero 3x3 matrix over GF(2) with the given coordinates.
[[nodiscard]] Matrix trace_zero_from_coords(const FieldPrime& f,
                                            const std::array<unsigned, 8>& c) {
  Matrix m(f, 3, 3);
  m.set(0, 1, c[0]);
  m.set(0, 2, c[1]);
  m.set(1, 0, c[2]);
  m.set(1, 2, c[3]);
  m.set(2, 0, c[4]);
  m.set(2, 1, c[5]);
  m.set(0, 0, c[6]);
  m.set(1, 1, (c[6] + c[7]) % 2);
  m.set(2, 2, c[7]);
  return m;
}

/// The 8x8 matrix (column convention) of a linear self-map of the
/// trace-zero 3x3 matrices over GF(2).
template <typename MapFn>
[[nodiscard]] Matrix trace_zero_action(const FieldPrime& f, MapFn&& map) {
  Matrix out(f, 8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    std::array<unsigned, 8> e{};
    e[k] = 1;
    const Matrix image = map(trace_zero_from_coords(f, e));
    const std::array<unsigned, 8> coords = trace_zero_coords(image);
    for (std::size_t j = 0; j < 8; ++j) {
      out.set(j, k, coords[j]);
    }
  }
  return out;
}

}  // namespace

RepDatum sym_power_rep(unsigned m, unsigned p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("sym_power_rep: p must be prime");
  }
  if (m < 1 || m >= p) {
    throw std::invalid_argument("sym_power_rep: requires 1 <= m < p");
  }
  const FieldPrime f(p);
  const std::size_t dim = m + 1;

  // Binomial coefficients mod p via the Pascal recurrence; with m < p no
  // entry C(k, j), k <= m, vanishes spuriously.
  std::vector<std::vector<unsigned>> binom(dim, std::vector<unsigned>(dim, 0));
  for (std::size_t k = 0; k < dim; ++k) {
    binom[k][0] = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      binom[k][j] = (binom[k - 1][j - 1] + (j <= k - 1 ? binom[k - 1][j] : 0)) % p;
    }
  }

  // Basis: monomials X^{m-k} Y^k.  The upper unipotent maps Y -> X + Y,
  // sending basis vector k to sum_j C(k, j) e_j; the lower maps
  // X -> X + Y, sending e_k to sum_j C(m-k, j-k) e_j.
  Matrix upper(f, dim, dim);
  Matrix lower(f, dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      upper.set(j, k, binom[k][j]);
    }
    for (std::size_t j = k; j < dim; ++j) {
      lower.set(j, k, binom[m - k][j - k]);
    }
  }

  std::ostringstream tag;
  tag << "A1:sym:" << m << ":" << p;
  RepDatum datum{tag.str(), p, dim, {upper, lower}, upper, p};
  const unsigned long long ord =
      require_type_and_order(datum.u, single_block(m + 1), p, datum.row_tag);
  if (ord != p) {
    throw std::runtime_error("reptable: row " + datum.row_tag +
                             " must have order exactly p");
  }
  return datum;
}

RepDatum natural_rep(RepFamily family, unsigned l, unsigned p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("natural_rep: p must be prime");
  }
  RegularRep rep = [&] {
    switch (family) {
      case RepFamily::A:
        if (l < 1) {
          throw std::invalid_argument("natural_rep: family A requires l >= 1");
        }
        return regular_in_sl(l + 1, p);
      case RepFamily::B:
        if (l < 2) {
          throw std::invalid_argument("natural_rep: family B requires l >= 2");
        }
        if (p == 2) {
          throw std::invalid_argument("natural_rep: family B requires p odd");
        }
        return regular_in_so(2 * l + 1, p);
      case RepFamily::C:
        if (l < 2) {
          throw std::invalid_argument("natural_rep: family C requires l >= 2");
        }
        return regular_in_sp(2 * l, p);
      case RepFamily::D2:
        if (l < 3) {
          throw std::invalid_argument(
              "natural_rep: family D2 requires l >= 3");
        }
        if (p != 2) {
          throw std::invalid_argument("natural_rep: family D2 requires p = 2");
        }
        return go_outer_regular(2 * l, 2);
    }
    throw std::invalid_argument("natural_rep: unknown family");
  }();

  const FieldPrime& f = rep.u.field();
  std::vector<Matrix> gens;
  JordanType want;
  unsigned long long bound = 0;
  switch (family) {
    case RepFamily::A:
      gens = sl_transvections(f, l + 1);
      want = single_block(l + 1);
      bound = static_cast<unsigned long long>(p) * (l + 1);
      break;
    case RepFamily::B:
      gens = isometry_generators(std::get<QuadSpace>(*rep.space));
      want = single_block(2 * l + 1);
      bound = static_cast<unsigned long long>(p) * (2 * l + 1);
      break;
    case RepFamily::C:
      gens = isometry_generators(std::get<SympSpace>(*rep.space));
      want = single_block(2 * l);
      bound = 2ULL * p * l;
      break;
    case RepFamily::D2:
      gens = isometry_generators(std::get<QuadSpace>(*rep.space));
      want = single_block(2 * l);
      bound = 4ULL * l;
      break;
  }

  std::ostringstream tag;
  tag << to_string(family) << ":nat:" << l << ":" << p;
  RepDatum datum{tag.str(), p,   static_cast<std::size_t>(want.dimension()),
                 std::move(gens), rep.u, bound};
  const unsigned long long ord =
      require_type_and_order(datum.u, want, bound, datum.row_tag);
  if (ord >= bound) {
    throw std::runtime_error("reptable: row " + datum.row_tag +
                             " must have order strictly below its bound");
  }
  return datum;
}

RepDatum g2_rep(unsigned p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("g2_rep: p must be prime");
  }
  const FieldPrime f(p);

  std::vector<Matrix> roots;
  roots.reserve(g2data::kRootCount);
  for (const auto& entry : g2data::kRootElements) {
    roots.push_back(reduce_mod<g2data::kDim>(f, entry));
  }
  const QuadSpace invariant_form(reduce_mod<g2data::kDim>(f, g2data::kQuadForm));

  // Validation gate on the frozen data: every root element must be a
  // unipotent isometry of the invariant quadratic form, and opposite
  // root elements must fail to commute (a structure-constants sanity
  // check: [x_alpha, x_{-alpha}] lands in the torus direction).
  for (std::size_t k = 0; k < g2data::kRootCount; ++k) {
    if (!is_unipotent(roots[k])) {
      throw std::runtime_error("g2_rep: root element is not unipotent");
    }
    if (!is_isometry(roots[k], invariant_form)) {
      throw std::runtime_error(
          "g2_rep: root element does not preserve the quadratic form");
    }
  }
  for (std::size_t k = 0; k + 6 < g2data::kRootCount; ++k) {
    const Matrix& a = roots[k];
    const Matrix& b = roots[k + 6];
    if (a * b == b * a) {
      throw std::runtime_error(
          "g2_rep: opposite root elements unexpectedly commute");
    }
  }

  const Matrix u7 = roots[g2data::kShortSimple] * roots[g2data::kLongSimple];

  if (p != 2) {
    std::ostringstream tag;
    tag << "G2:7:" << p;
    RepDatum datum{tag.str(), p, g2data::kDim, roots, u7,
                   static_cast<unsigned long long>(p) * p};
    require_type_and_order(datum.u, single_block(7),
                           static_cast<unsigned long long>(p) * p,
                           datum.row_tag);
    const IrreducibilityResult irr =
        is_absolutely_irreducible(ModuleAction(datum.generators));
    if (!irr.absolutely_irreducible()) {
      throw std::runtime_error(
          "g2_rep: 7-dimensional module failed the absolute-irreducibility "
          "check");
    }
    return datum;
  }

  // p = 2: the identity-octonion direction (coordinate 0) is congruent to
  // the radical of the form and is fixed by every generator; the action
  // descends to the 6-dimensional quotient by coordinate 0, which carries
  // the standard symplectic form in coordinate pairs (i, 3 + i).
  for (const Matrix& g : roots) {
    for (std::size_t i = 1; i < g2data::kDim; ++i) {
      if (g.at(i, 0) != 0) {
        throw std::runtime_error(
            "g2_rep: radical line is not fixed in characteristic 2");
      }
    }
  }
  std::vector<Matrix> quotient;
  quotient.reserve(roots.size());
  for (const Matrix& g : roots) {
    quotient.push_back(g.block(1, 1, 6, 6));
  }
  const SympSpace symp = SympSpace::standard(f, 3);
  for (const Matrix& g : quotient) {
    if (!is_isometry(g, symp)) {
      throw std::runtime_error(
          "g2_rep: quotient generator does not preserve the symplectic form");
    }
  }
  const Matrix u6 =
      quotient[g2data::kShortSimple] * quotient[g2data::kLongSimple];
  RepDatum datum{"G2:6:2", 2, 6, quotient, u6, 8};
  const unsigned long long ord =
      require_type_and_order(datum.u, single_block(6), 8, datum.row_tag);
  if (ord != 8) {
    throw std::runtime_error("reptable: row G2:6:2 must have order exactly 8");
  }
  const IrreducibilityResult irr =
      is_absolutely_irreducible(ModuleAction(datum.generators));
  if (!irr.absolutely_irreducible()) {
    throw std::runtime_error(
        "g2_rep: 6-dimensional module failed the absolute-irreducibility "
        "check");
  }
  return datum;
}

RepDatum a2_adjoint_outer(unsigned p) {
  if (p != 2) {
    throw std::invalid_argument("a2_adjoint_outer: requires p = 2");
  }
  const FieldPrime f(2);

  // Deterministic candidate order: 3x3 bit patterns c = 0..511 with entry
  // (i, j) = bit (8 - (3i + j)) of c; invertible candidates that are
  // unipotent come first (ascending c), then the remaining invertible
  // ones (ascending c).
  std::vector<Matrix> candidates;
  std::vector<Matrix> deferred;
  for (unsigned c = 0; c < 512; ++c) {
    Matrix g(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        g.set(i, j, (c >> (8 - (3 * i + j))) & 1U);
      }
    }
    if (rank(g) != 3) continue;
    (is_unipotent(g) ? candidates : deferred).push_back(g);
  }
  candidates.insert(candidates.end(), deferred.begin(), deferred.end());

  const JordanType want = single_block(8);
  for (const Matrix& g : candidates) {
    const Matrix ginv = *inverse(g);
    const Matrix outer = trace_zero_action(f, [&](const Matrix& m) {
      return (g * m * ginv).transpose();
    });
    if (!is_unipotent(outer) || !(jordan_type(outer) == want)) continue;

    // u^2 = Ad(g^{-T} g) must be the inner conjugation action: the
    // square of any element of the outer coset lies in the image of the
    // conjugation representation.
    const Matrix twist = ginv.transpose() * g;
    const Matrix inner_square = trace_zero_action(
        f, [&](const Matrix& m) { return twist * m * *inverse(twist); });
    if (!(outer * outer == inner_square)) {
      throw std::logic_error(
          "a2_adjoint_outer: outer square is not the expected inner action");
    }

    std::vector<Matrix> gens;
    const std::array<std::pair<std::size_t, std::size_t>, 4> positions = {
        {{0, 1}, {1, 2}, {1, 0}, {2, 1}}};
    for (const auto& [i, j] : positions) {
      const Matrix t = transvection(f, 3, i, j);
      const Matrix tinv = *inverse(t);
      gens.push_back(trace_zero_action(
          f, [&](const Matrix& m) { return t * m * tinv; }));
    }

    RepDatum datum{"A2.2:adj:2", 2, 8, std::move(gens), outer, 8};
    const unsigned long long ord =
        require_type_and_order(datum.u, want, 8, datum.row_tag);
    if (ord != 8) {
      throw std::runtime_error(
          "reptable: row A2.2:adj:2 must have order exactly 8");
    }
    return datum;
  }
  throw std::runtime_error(
      "a2_adjoint_outer: exhausted SL_3(GF(2)) without a single-block outer "
      "element");
}

RepDatum tensor_wreath(unsigned p) {
  if (p != 2 && p != 3) {
    throw std::invalid_argument("tensor_wreath: requires p in {2, 3}");
  }
  const FieldPrime f(p);
  const std::size_t dim = std::size_t{1} << p;  // 2^p

  // Cyclic rotation of the p tensor factors of GF(p)^2: basis index bits
  // (big-endian, one bit per factor) rotate left.
  Matrix cycle(f, dim, dim);
  const std::size_t mask = dim - 1;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const std::size_t rotated = ((idx << 1) | (idx >> (p - 1))) & mask;
    cycle.set(rotated, idx, 1);
  }

  const Matrix j2 = jordan_block(f, 2);
  Matrix first_factor = j2;
  for (unsigned k = 1; k < p; ++k) {
    first_factor = kronecker(first_factor, Matrix::identity(f, 2));
  }
  const Matrix u = cycle * first_factor;

  // Embed the two SL_2 unipotent generators into each tensor slot.
  std::vector<Matrix> gens;
  const Matrix lower = j2.transpose();
  for (unsigned slot = 0; slot < p; ++slot) {
    for (const Matrix* base : {&j2, &lower}) {
      Matrix embedded = Matrix::identity(f, 1);
      for (unsigned k = 0; k < p; ++k) {
        embedded = kronecker(embedded,
                             k == slot ? *base : Matrix::identity(f, 2));
      }
      gens.push_back(std::move(embedded));
    }
  }

  std::ostringstream tag;
  tag << "L2.7(2):" << p;
  RepDatum datum{tag.str(), p, dim, std::move(gens), u,
                 unipotent_order(single_block(static_cast<unsigned>(dim)), p)};
  const unsigned long long ord = require_type_and_order(
      datum.u, single_block(static_cast<unsigned>(dim)), datum.order_bound,
      datum.row_tag);
  if (ord != datum.order_bound) {
    throw std::runtime_error("reptable: row " + datum.row_tag +
                             " must attain its order bound exactly");
  }

  // u^p is J_2 applied simultaneously on every factor.
  Matrix all_factors = j2;
  for (unsigned k = 1; k < p; ++k) {
    all_factors = kronecker(all_factors, j2);
  }
  if (!(datum.u.pow(p) == all_factors)) {
    throw std::runtime_error(
        "reptable: tensor_wreath p-th power is not the diagonal Jordan "
        "action");
  }
  return datum;
}

RepDatum tensor_swap9() {
  const FieldPrime f(2);
  const Matrix j3 = jordan_block(f, 3);

  // u(v tensor w) = w tensor (J_3 v): the swap matrix S (e_i tensor e_j
  // -> e_j tensor e_i) composed with J_3 acting on the first factor.
  Matrix swap(f, 9, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      swap.set(3 * j + i, 3 * i + j, 1);
    }
  }
  const Matrix u = swap * kronecker(j3, Matrix::identity(f, 3));

  std::vector<Matrix> gens;
  for (const Matrix& t : sl_transvections(f, 3)) {
    gens.push_back(kronecker(t, Matrix::identity(f, 3)));
    gens.push_back(kronecker(Matrix::identity(f, 3), t));
  }

  RepDatum datum{"L2.7(3)", 2, 9, std::move(gens), u, 8};
  const unsigned long long ord = require_type_and_order(
      datum.u, JordanType(std::vector<unsigned>{8, 1}), 8, datum.row_tag);
  if (ord != 8) {
    throw std::runtime_error("reptable: row L2.7(3) must have order exactly 8");
  }
  if (!(datum.u * datum.u == kronecker(j3, j3))) {
    throw std::runtime_error(
        "reptable: tensor_swap9 square is not J_3 tensor J_3");
  }
  return datum;
}

}  // namespace regulib
