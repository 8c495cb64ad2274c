// SPDX-License-Identifier: MIT

#include "regulib/modstruct.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "regulib/classical.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"

using regulib::FieldPrime;
using regulib::JordanType;
using regulib::Matrix;
using regulib::ModuleAction;
using regulib::QuadSpace;
using regulib::SubspaceBasis;
using regulib::SympSpace;

namespace {

Matrix row(const FieldPrime& f, std::initializer_list<long long> v) {
  Matrix m(f, 1, v.size());
  std::size_t j = 0;
  for (long long x : v) m.set(0, j++, x);
  return m;
}

std::vector<Matrix> sl2_natural(const FieldPrime& f) {
  return {Matrix::from_rows(f, {{1, 1}, {0, 1}}),
          Matrix::from_rows(f, {{1, 0}, {1, 1}})};
}

// Degree-2 symmetric power of the two standard SL_2 generators, on the
// basis {x@x, x@y + y@x, y@y}.
std::vector<Matrix> sl2_sym2(const FieldPrime& f) {
  return {Matrix::from_rows(f, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}),
          Matrix::from_rows(f, {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}})};
}

std::vector<Matrix> doubled(const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const Matrix& g : gens) out.push_back(regulib::direct_sum(g, g));
  return out;
}

}  // namespace

TEST_CASE("ModuleAction validation", "[modstruct][action]") {
  const FieldPrime f(3);
  CHECK_THROWS_AS(ModuleAction({}), std::invalid_argument);
  CHECK_THROWS_AS(
      ModuleAction({Matrix::identity(f, 2), Matrix::identity(f, 3)}),
      std::invalid_argument);
  CHECK_THROWS_AS(ModuleAction({Matrix(f, 2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(ModuleAction({Matrix(f, 2, 2)}), std::invalid_argument);

  const ModuleAction action(sl2_natural(f));
  CHECK(action.dim() == 2);
  CHECK(action.generators().size() == 2);
  // Inverses are adjoined (neither standard generator is an involution
  // over GF(3)).
  CHECK(action.closure_generators().size() == 4);
}

TEST_CASE("spin closure", "[modstruct][spin]") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  SECTION("cyclic vector of a single Jordan block") {
    const ModuleAction action({regulib::jordan_block(f3, 4)});
    const auto full = regulib::spin(
        action, SubspaceBasis(row(f3, {0, 0, 0, 1})));
    CHECK(full.dim() == 4);

    const auto fixed_line = regulib::spin(
        action, SubspaceBasis(row(f3, {1, 0, 0, 0})));
    CHECK(fixed_line.dim() == 1);
  }

  SECTION("seed inside one summand of J_2 + J_2 stays there") {
    const Matrix u = regulib::direct_sum(regulib::jordan_block(f2, 2),
                                         regulib::jordan_block(f2, 2));
    const auto closure = regulib::spin(
        ModuleAction({u}), SubspaceBasis(row(f2, {0, 1, 0, 0})));
    CHECK(closure.dim() == 2);
    CHECK(closure.contains(row(f2, {1, 0, 0, 0})));
    CHECK(closure.contains(row(f2, {0, 1, 0, 0})));
  }

  SECTION("a line of an invariant totally singular subspace spins inside it") {
    // diag(g, g^{-T}) stabilises W = <e_1..e_l> and W* on the hyperbolic
    // space; a seed in W must stay in W.
    const Matrix g = regulib::jordan_block(f2, 3);
    const Matrix git = regulib::inverse(g)->transpose();
    const ModuleAction action({regulib::direct_sum(g, git)});
    const QuadSpace space = QuadSpace::hyperbolic(f2, 3);

    const auto closure = regulib::spin(
        action, SubspaceBasis(row(f2, {0, 0, 1, 0, 0, 0})));
    CHECK(closure.dim() <= 3);
    CHECK(regulib::is_totally_singular(closure, space));
    for (std::size_t i = 0; i < closure.dim(); ++i) {
      CHECK(closure.matrix().at(i, 3) == 0);
      CHECK(closure.matrix().at(i, 4) == 0);
      CHECK(closure.matrix().at(i, 5) == 0);
    }
  }

  SECTION("spin output is invariant under every generator") {
    const auto gens = regulib::isometry_generators(SympSpace::standard(f3, 2));
    const ModuleAction action(gens);
    const auto closure =
        regulib::spin(action, SubspaceBasis(row(f3, {1, 0, 2, 0})));
    for (const Matrix& g : action.closure_generators()) {
      const Matrix image = closure.matrix() * g.transpose();
      for (std::size_t i = 0; i < image.rows(); ++i) {
        CHECK(closure.contains(image.block(i, 0, 1, image.cols())));
      }
    }
  }

  SECTION("ambient mismatch is rejected") {
    const ModuleAction action({regulib::jordan_block(f2, 3)});
    CHECK_THROWS_AS(
        regulib::spin(action, SubspaceBasis(row(f2, {1, 0}))),
        std::invalid_argument);
  }
}

TEST_CASE("exhaustive irreducibility", "[modstruct][irreducible]") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  SECTION("natural SL_2 module") {
    const auto result =
        regulib::is_absolutely_irreducible(ModuleAction(sl2_natural(f3)));
    CHECK(result.irreducible);
    CHECK(result.commutant_dim == 1);
    CHECK(result.absolutely_irreducible());
    CHECK_FALSE(result.witness.has_value());
  }

  SECTION("degree-2 symmetric power at p = 3") {
    const auto result =
        regulib::is_absolutely_irreducible(ModuleAction(sl2_sym2(f3)));
    CHECK(result.absolutely_irreducible());
  }

  SECTION("doubled natural module is reducible with a diagonal witness") {
    const auto result = regulib::is_absolutely_irreducible(
        ModuleAction(doubled(sl2_natural(f3))));
    CHECK_FALSE(result.irreducible);
    CHECK_FALSE(result.absolutely_irreducible());
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->dim() == 2);
    // Canonical order starts at the line through e_1, which spins to the
    // first summand.
    CHECK(result.witness->matrix() ==
          Matrix::from_rows(f3, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(result.commutant_dim == 4);
  }

  SECTION("unipotent cyclic group is reducible") {
    const auto result = regulib::is_absolutely_irreducible(
        ModuleAction({regulib::jordan_block(f2, 3)}));
    CHECK_FALSE(result.irreducible);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->dim() < 3);
  }

  SECTION("natural symplectic and orthogonal modules") {
    const auto sp = regulib::is_absolutely_irreducible(
        ModuleAction(regulib::isometry_generators(SympSpace::standard(f2, 2))));
    CHECK(sp.absolutely_irreducible());

    const auto so = regulib::is_absolutely_irreducible(ModuleAction(
        regulib::isometry_generators(QuadSpace::hyperbolic(f2, 3))));
    CHECK(so.absolutely_irreducible());
  }

  SECTION("line-count cap") {
    CHECK_THROWS_AS(
        regulib::is_absolutely_irreducible(
            ModuleAction({regulib::jordan_block(f2, 24)})),
        std::invalid_argument);
  }
}

TEST_CASE("commutant dimension", "[modstruct][commutant]") {
  const FieldPrime f3(3);

  CHECK(regulib::commutant_dimension(ModuleAction(sl2_natural(f3))) == 1);
  CHECK(regulib::commutant_dimension(
            ModuleAction(doubled(sl2_natural(f3)))) == 4);

  // Direct sum of two non-isomorphic irreducibles: natural + Sym^2.
  std::vector<Matrix> mixed;
  const auto nat = sl2_natural(f3);
  const auto sym = sl2_sym2(f3);
  for (std::size_t i = 0; i < nat.size(); ++i) {
    mixed.push_back(regulib::direct_sum(nat[i], sym[i]));
  }
  CHECK(regulib::commutant_dimension(ModuleAction(mixed)) == 2);
}

TEST_CASE("fixed spaces", "[modstruct][fixed]") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  CHECK(regulib::fixed_space(regulib::jordan_block(f3, 5)).dim() == 1);
  CHECK(regulib::fixed_space(
            regulib::jordan_matrix(f2, JordanType({3, 2}))).dim() == 2);

  // Fixed-space dimension equals the number of Jordan blocks.
  for (unsigned p : {2u, 3u}) {
    const FieldPrime f(p);
    for (const auto& blocks :
         {std::vector<unsigned>{4}, {3, 1}, {2, 2, 1}, {5, 3}}) {
      const JordanType t(blocks);
      CHECK(regulib::fixed_space(regulib::jordan_matrix(f, t)).dim() ==
            t.blocks().size());
    }
  }

  // A type-[6,2] isometry of an 8-dimensional space fixes a plane.
  const auto rep = regulib::gl_stab_outer(4, 2);
  CHECK(regulib::jordan_type(rep.u) == JordanType({6, 2}));
  CHECK(regulib::fixed_space(rep.u).dim() == 2);

  CHECK_THROWS_AS(regulib::fixed_space(Matrix(f2, 2, 3)),
                  std::invalid_argument);
}
