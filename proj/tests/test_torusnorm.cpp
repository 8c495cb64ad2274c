// SPDX-License-Identifier: MIT

#include "regulib/torusnorm.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <optional>
#include <variant>
#include <vector>

#include "regulib/classical.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"

using regulib::ContainmentWitness;
using regulib::DiagTorus;
using regulib::FieldPrime;
using regulib::JordanType;
using regulib::Matrix;
using regulib::QuadSpace;
using regulib::SubspaceBasis;
using regulib::SympSpace;
using regulib::TorusNormalizerDatum;
using regulib::WitnessKind;

namespace {

JordanType jt(std::initializer_list<unsigned> blocks) {
  return JordanType(std::vector<unsigned>(blocks));
}

Matrix row(const FieldPrime& f, std::initializer_list<long long> v) {
  Matrix m(f, 1, v.size());
  std::size_t j = 0;
  for (long long x : v) m.set(0, j++, x);
  return m;
}

using Weights = std::vector<std::vector<long long>>;

/// Rank-one torus acting by +1 on the first half of the coordinates and
/// -1 on the second half.
DiagTorus half_swap_torus(const FieldPrime& f, std::size_t half) {
  Weights w(2 * half, std::vector<long long>(1, 0));
  for (std::size_t i = 0; i < half; ++i) {
    w[i][0] = 1;
    w[half + i][0] = -1;
  }
  return DiagTorus(1, std::move(w), f);
}

/// Checks that a subspace witness is genuinely invariant under g.
bool invariant_under(const SubspaceBasis& s, const Matrix& g) {
  const Matrix images = s.matrix() * g.transpose();
  for (std::size_t i = 0; i < images.rows(); ++i) {
    if (!s.contains(images.block(i, 0, 1, images.cols()))) return false;
  }
  return true;
}

const SubspaceBasis& witness_subspace(const ContainmentWitness& w) {
  return std::get<SubspaceBasis>(w.data);
}

/// Full verification of a datum-level witness against its datum: the
/// subspace kinds must be u-invariant, weight-compatible shapes are
/// implied by construction, and the singularity claim must hold; the
/// centralized-unipotent kind must be nontrivial unipotent and centralize
/// the torus.
void verify_witness(const ContainmentWitness& w, const TorusNormalizerDatum& datum) {
  if (w.kind == WitnessKind::centralized_unipotent) {
    const Matrix& g = std::get<Matrix>(w.data);
    CHECK(!g.is_identity());
    CHECK(regulib::is_unipotent(g));
    CHECK(regulib::centralizes_torus(g, datum.torus));
    return;
  }
  const SubspaceBasis& s = witness_subspace(w);
  CHECK(s.dim() > 0);
  CHECK(invariant_under(s, datum.u));
  if (!datum.ambient_form) {
    CHECK(w.kind == WitnessKind::invariant_subspace);
    CHECK(s.dim() < datum.torus.dim());
  } else {
    CHECK(w.kind == WitnessKind::invariant_totally_singular_subspace);
    if (std::holds_alternative<QuadSpace>(*datum.ambient_form)) {
      CHECK(regulib::is_totally_singular(s, std::get<QuadSpace>(*datum.ambient_form)));
    } else {
      CHECK(regulib::is_totally_isotropic(s, std::get<SympSpace>(*datum.ambient_form)));
    }
  }
}

}  // namespace

TEST_CASE("DiagTorus validates its construction data") {
  const FieldPrime f3(3);
  CHECK_THROWS_AS(DiagTorus(0, Weights{{1}}, f3), std::invalid_argument);
  CHECK_THROWS_AS(DiagTorus(1, Weights{}, f3), std::invalid_argument);
  CHECK_THROWS_AS(DiagTorus(2, Weights{{1}, {0, 1}}, f3), std::invalid_argument);
  CHECK_THROWS_AS(DiagTorus(1, Weights{{1}, {-1}}, Matrix(f3, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(DiagTorus(1, Weights{{1}, {-1}}, Matrix::from_rows(f3, {{1, 2}, {2, 4}})),
                  std::invalid_argument);
  const DiagTorus t(1, Weights{{1}, {-1}}, f3);
  CHECK(t.rank() == 1);
  CHECK(t.dim() == 2);
}

TEST_CASE("weight_spaces groups equal weight vectors") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  // Block-scalar torus with two blocks of size 2: two weight spaces of
  // equal dimension.
  const auto wreath = regulib::sl_wreath(2, 1, 2);
  const auto spaces = regulib::weight_spaces(wreath.torus);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].second.dim() == 2);
  CHECK(spaces[1].second.dim() == 2);
  CHECK(spaces[0].first == std::vector<long long>{1});
  CHECK(spaces[1].first == std::vector<long long>{-1});

  // Maximal diagonal torus of the determinant-one group on dim 3: three
  // weight lines.
  const DiagTorus diag3(2, Weights{{1, 0}, {0, 1}, {-1, -1}}, f3);
  const auto lines = regulib::weight_spaces(diag3);
  REQUIRE(lines.size() == 3);
  for (const auto& [w, space] : lines) CHECK(space.dim() == 1);

  // Scalar/inverse-scalar torus on a hyperbolic space: two halves.
  const auto halves = regulib::weight_spaces(half_swap_torus(f2, 3));
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].second.dim() == 3);
  CHECK(halves[1].second.dim() == 3);

  // A non-identity eigenbasis is honored.
  const Matrix change = Matrix::from_rows(f3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const DiagTorus skew(1, Weights{{1}, {1}, {-2}}, change);
  const auto grouped = regulib::weight_spaces(skew);
  REQUIRE(grouped.size() == 2);
  CHECK(grouped[0].second.dim() == 2);
  CHECK(grouped[0].second.contains(row(f3, {1, 1, 0})));
  CHECK(grouped[0].second.contains(row(f3, {0, 1, 0})));
  CHECK(grouped[1].second.contains(row(f3, {0, 0, 1})));

  // Dimensions always sum to the ambient dimension.
  std::size_t total = 0;
  for (const auto& [w, space] : grouped) total += space.dim();
  CHECK(total == skew.dim());
}

TEST_CASE("normalizes_torus detects weight-space permutations") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  // The wreath element cycles the three weight lines of its block-scalar
  // torus.
  const auto wreath = regulib::sl_wreath(3, 1, 1);
  const auto perm = regulib::normalizes_torus(wreath.u, wreath.torus);
  REQUIRE(perm.has_value());
  CHECK(*perm == std::vector<std::size_t>{1, 2, 0});

  // The identity induces the identity permutation.
  const auto id_perm =
      regulib::normalizes_torus(Matrix::identity(f3, 3), wreath.torus);
  REQUIRE(id_perm.has_value());
  CHECK(*id_perm == std::vector<std::size_t>{0, 1, 2});

  // A non-monomial element does not permute the weight lines of the full
  // diagonal torus.
  const DiagTorus diag2(2, Weights{{1, 0}, {0, 1}}, f2);
  CHECK_FALSE(regulib::normalizes_torus(Matrix::from_rows(f2, {{1, 1}, {0, 1}}), diag2));

  // Swapping weight lines is only a normalization when the induced weight
  // map extends to a lattice automorphism: +1 <-> -1 does...
  const Matrix swap2 = Matrix::from_rows(f3, {{0, 1}, {1, 0}});
  const DiagTorus opposed(1, Weights{{1}, {-1}}, f3);
  CHECK(regulib::normalizes_torus(swap2, opposed).has_value());

  // ...but +1 <-> +2 does not (A*1 = 2 and A*2 = 1 are inconsistent), even
  // though the spaces are swapped bijectively.
  const DiagTorus stretched(1, Weights{{1}, {2}}, f3);
  CHECK_FALSE(regulib::normalizes_torus(swap2, stretched).has_value());

  // Shape mismatches are absences, not errors.
  CHECK_FALSE(regulib::normalizes_torus(Matrix::identity(f3, 4), opposed).has_value());
}

TEST_CASE("centralizes_torus tests setwise weight-space stabilization") {
  const FieldPrime f3(3);

  // The block-scalar datum with d > 1: u^{p^a} is nontrivial and
  // centralizes, u itself does not.
  const auto wreath = regulib::sl_wreath(2, 1, 2);
  const Matrix u4 = wreath.u.pow(2);
  CHECK(!u4.is_identity());
  CHECK(regulib::centralizes_torus(u4, wreath.torus));
  CHECK_FALSE(regulib::centralizes_torus(wreath.u, wreath.torus));

  // Any diagonal element centralizes a diagonal torus.
  const DiagTorus diag3(2, Weights{{1, 0}, {0, 1}, {-1, -1}}, f3);
  const Matrix diag = Matrix::from_rows(f3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK(regulib::centralizes_torus(diag, diag3));
}

TEST_CASE("restrict_to_invariant extracts the coefficient action") {
  const FieldPrime f2(2);
  const Matrix j4 = regulib::jordan_block(f2, 4);
  const SubspaceBasis front(Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const Matrix r = regulib::restrict_to_invariant(j4, front);
  CHECK(r == Matrix::from_rows(f2, {{1, 1}, {0, 1}}));

  const SubspaceBasis back(Matrix::from_rows(f2, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(regulib::restrict_to_invariant(j4, back), std::invalid_argument);
}

TEST_CASE("sl_wreath builds the block-scalar wreath datum") {
  const auto small = regulib::sl_wreath(2, 1, 2);
  CHECK(small.torus.dim() == 4);
  CHECK(small.torus.rank() == 1);
  CHECK(!small.ambient_form.has_value());
  CHECK(regulib::jordan_type(small.u) == jt({4}));
  CHECK(small.construction == "sl_wreath");
  CHECK(small.params == std::vector<unsigned>{2, 1, 2});

  // u^{p^a} is the diagonal of seed blocks.
  const FieldPrime f2(2);
  const Matrix jd = regulib::jordan_block(f2, 2);
  CHECK(small.u.pow(2) == regulib::direct_sum(jd, jd));

  // The weight multiset of a determinant-one torus sums to zero.
  std::vector<long long> sum(small.torus.rank(), 0);
  for (const auto& w : small.torus.weights()) {
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += w[k];
  }
  CHECK(sum == std::vector<long long>(small.torus.rank(), 0));

  // Maximal-torus cases: a = 2, d = 1 over GF(2) and the GF(3) wreath.
  const auto maximal = regulib::sl_wreath(2, 2, 1);
  CHECK(maximal.torus.rank() == 3);
  CHECK(regulib::jordan_type(maximal.u) == jt({4}));

  const auto triple = regulib::sl_wreath(3, 1, 1);
  CHECK(triple.torus.rank() == 2);
  CHECK(regulib::jordan_type(triple.u) == jt({3}));

  const auto mixed = regulib::sl_wreath(3, 1, 2);
  CHECK(mixed.torus.dim() == 6);
  CHECK(regulib::jordan_type(mixed.u) == jt({6}));
  const FieldPrime f3(3);
  const Matrix jd3 = regulib::jordan_block(f3, 2);
  CHECK(mixed.u.pow(3) == regulib::direct_sum(regulib::direct_sum(jd3, jd3), jd3));

  CHECK_THROWS_AS(regulib::sl_wreath(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(regulib::sl_wreath(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(regulib::sl_wreath(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(regulib::sl_wreath(2, 20, 1), std::invalid_argument);
}

TEST_CASE("go_wreath builds the orthogonal wreath datum") {
  const auto datum = regulib::go_wreath(3, 1);
  CHECK(datum.torus.dim() == 12);
  CHECK(datum.torus.rank() == 2);
  REQUIRE(datum.ambient_form.has_value());
  const auto& space = std::get<QuadSpace>(*datum.ambient_form);
  CHECK(space.is_nondegenerate());
  CHECK(regulib::is_isometry(datum.u, space));
  CHECK(regulib::jordan_type(datum.u) == jt({12}));
  CHECK(regulib::dickson(datum.u, space) == 1);

  // u^{2^{f+1}} is nontrivial and centralizes the torus; u^{2^f} moves the
  // weight spaces (it swaps each block's two halves).
  const Matrix u4 = datum.u.pow(4);
  CHECK(!u4.is_identity());
  CHECK(regulib::centralizes_torus(u4, datum.torus));
  CHECK_FALSE(regulib::centralizes_torus(datum.u.pow(2), datum.torus));

  // Weight-space structure: one transitive orbit of totally singular
  // spaces pairing off orthogonally (tag-0 paired report).
  const auto report = regulib::classify_torus_case(datum);
  CHECK(report.case_tag == 0);
  CHECK(report.common_weight_dim == 3);
  CHECK(report.orbit_sizes == std::vector<std::size_t>{4});
  CHECK(report.zero_weight_dim == 0);

  const auto larger = regulib::go_wreath(5, 1);
  CHECK(larger.torus.dim() == 20);
  CHECK(regulib::jordan_type(larger.u) == jt({20}));

  const auto deeper = regulib::go_wreath(3, 2);
  CHECK(deeper.torus.dim() == 24);
  CHECK(deeper.torus.rank() == 4);
  CHECK(regulib::jordan_type(deeper.u) == jt({24}));
  const Matrix u8 = deeper.u.pow(8);
  CHECK(!u8.is_identity());
  CHECK(regulib::centralizes_torus(u8, deeper.torus));

  CHECK_THROWS_AS(regulib::go_wreath(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(regulib::go_wreath(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(regulib::go_wreath(3, 0), std::invalid_argument);
}

TEST_CASE("so_pair_stab builds the totally-singular-pair datum") {
  const auto datum = regulib::so_pair_stab(4);
  CHECK(datum.torus.dim() == 8);
  CHECK(datum.torus.rank() == 1);
  const auto& space = std::get<QuadSpace>(*datum.ambient_form);
  CHECK(regulib::is_isometry(datum.u, space));
  CHECK(regulib::jordan_type(datum.u) == jt({6, 2}));
  CHECK(regulib::dickson(datum.u, space) == 0);

  const Matrix u2 = datum.u.pow(2);
  CHECK(!u2.is_identity());
  CHECK(regulib::centralizes_torus(u2, datum.torus));

  // Trichotomy case 1: two swapped halves with u^2 of type [l-1, 1] on
  // both.
  const auto report = regulib::classify_torus_case(datum);
  CHECK(report.case_tag == 1);
  CHECK(report.orbit_sizes == std::vector<std::size_t>{2});
  const auto spaces = regulib::weight_spaces(datum.torus);
  for (const auto& [w, half] : spaces) {
    CHECK(regulib::jordan_type(regulib::restrict_to_invariant(u2, half)) == jt({3, 1}));
  }

  const auto larger = regulib::so_pair_stab(6);
  CHECK(larger.torus.dim() == 12);
  CHECK(regulib::jordan_type(larger.u) == jt({10, 2}));
  CHECK(regulib::classify_torus_case(larger).case_tag == 1);

  CHECK_THROWS_AS(regulib::so_pair_stab(5), std::invalid_argument);
  CHECK_THROWS_AS(regulib::so_pair_stab(2), std::invalid_argument);
}

TEST_CASE("so_orthsum builds the orthogonal-sum datum") {
  const auto datum = regulib::so_orthsum(5);
  CHECK(datum.torus.dim() == 10);
  CHECK(datum.torus.rank() == 4);
  const auto& space = std::get<QuadSpace>(*datum.ambient_form);
  CHECK(space.is_nondegenerate());
  CHECK(regulib::is_isometry(datum.u, space));
  CHECK(regulib::jordan_type(datum.u) == jt({8, 2}));
  CHECK(regulib::dickson(datum.u, space) == 0);

  // Trichotomy case 2: a fixed 2-dim zero-weight space plus one
  // transitive orbit on the 8 nonzero weight lines.
  const auto report = regulib::classify_torus_case(datum);
  CHECK(report.case_tag == 2);
  CHECK(report.zero_weight_dim == 2);
  CHECK(report.orbit_sizes == std::vector<std::size_t>{8, 1});

  // The permutation order equals the order of u, so no nontrivial power
  // of u centralizes the torus, and no fixed-line propagation is totally
  // singular: the search certifies absence.
  CHECK_FALSE(regulib::containment_witness(datum).has_value());

  const auto larger = regulib::so_orthsum(9);
  CHECK(larger.torus.dim() == 18);
  CHECK(regulib::jordan_type(larger.u) == jt({16, 2}));
  CHECK(regulib::classify_torus_case(larger).case_tag == 2);
  CHECK_FALSE(regulib::containment_witness(larger).has_value());

  CHECK_THROWS_AS(regulib::so_orthsum(4), std::invalid_argument);
  CHECK_THROWS_AS(regulib::so_orthsum(3), std::invalid_argument);
  CHECK_THROWS_AS(regulib::so_orthsum(6), std::invalid_argument);
}

TEST_CASE("sl4_wedge builds the wedge-square datum") {
  const auto datum = regulib::sl4_wedge();
  CHECK(datum.torus.dim() == 6);
  CHECK(datum.torus.rank() == 1);
  const auto& space = std::get<QuadSpace>(*datum.ambient_form);
  CHECK(space.is_nondegenerate());
  CHECK(regulib::is_isometry(datum.u, space));
  CHECK(regulib::jordan_type(datum.u) == jt({4, 2}));
  CHECK(regulib::dickson(datum.u, space) == 0);

  // Weight spaces {+2, 0, -2} of dims {1, 4, 1}; u swaps the two
  // 1-dim opposed spaces.
  const auto spaces = regulib::weight_spaces(datum.torus);
  REQUIRE(spaces.size() == 3);
  CHECK(spaces[0].first == std::vector<long long>{2});
  CHECK(spaces[0].second.dim() == 1);
  CHECK(spaces[1].first == std::vector<long long>{0});
  CHECK(spaces[1].second.dim() == 4);
  CHECK(spaces[2].first == std::vector<long long>{-2});
  CHECK(spaces[2].second.dim() == 1);

  const auto perm = regulib::normalizes_torus(datum.u, datum.torus);
  REQUIRE(perm.has_value());
  CHECK(*perm == std::vector<std::size_t>{2, 1, 0});

  const auto report = regulib::classify_torus_case(datum);
  CHECK(report.case_tag == 3);
  CHECK(report.zero_weight_dim == 4);

  // A fixed singular line inside the zero-weight space gives a witness.
  const auto witness = regulib::containment_witness(datum);
  REQUIRE(witness.has_value());
  CHECK(witness->kind == WitnessKind::invariant_totally_singular_subspace);
  verify_witness(*witness, datum);
}

TEST_CASE("classify_torus_case rejects structures outside the catalogue") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  // Unequal weight-space dimensions in the determinant-one ambient.
  const DiagTorus lopsided(1, Weights{{1}, {1}, {-2}}, f3);
  const TorusNormalizerDatum bad_sl{lopsided, Matrix::identity(f3, 3), std::nullopt,
                                    "handcrafted", {}};
  CHECK_THROWS_AS(regulib::classify_torus_case(bad_sl), std::runtime_error);

  // A non-normalizing element is a precondition error.
  const DiagTorus diag2(2, Weights{{1, 0}, {0, 1}}, f2);
  const TorusNormalizerDatum bad_norm{diag2, Matrix::from_rows(f2, {{1, 1}, {0, 1}}),
                                      std::nullopt, "handcrafted", {}};
  CHECK_THROWS_AS(regulib::classify_torus_case(bad_norm), std::invalid_argument);

  // A single-block 4-cycle on a dim-4 hyperbolic space: the paired tag-0
  // report, exercised on a handcrafted non-construction datum.  (A cycle
  // permutation matrix is unipotent over GF(2) exactly when its length is
  // a power of two.)
  Matrix cycle4(f2, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) cycle4.set((i + 1) % 4, i, 1);
  Weights eps(4, std::vector<long long>(2, 0));
  for (std::size_t i = 0; i < 2; ++i) {
    eps[i][i] = 1;
    eps[2 + i][i] = -1;
  }
  const QuadSpace hyper4 = QuadSpace::hyperbolic(f2, 2);
  REQUIRE(regulib::is_isometry(cycle4, hyper4));
  REQUIRE(regulib::jordan_type(cycle4) == jt({4}));
  const TorusNormalizerDatum go4{DiagTorus(2, eps, f2), cycle4, hyper4, "handcrafted", {}};
  const auto paired = regulib::classify_torus_case(go4);
  CHECK(paired.case_tag == 0);
  CHECK(paired.common_weight_dim == 1);
  CHECK(paired.orbit_sizes == std::vector<std::size_t>{4});

  // Six singleton orbits on a dim-6 hyperbolic space match no trichotomy
  // case.
  Weights eps6(6, std::vector<long long>(3, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    eps6[i][i] = 1;
    eps6[3 + i][i] = -1;
  }
  const QuadSpace hyper6 = QuadSpace::hyperbolic(f2, 3);
  const TorusNormalizerDatum so6{DiagTorus(3, eps6, f2), Matrix::identity(f2, 6), hyper6,
                                 "handcrafted", {}};
  CHECK_THROWS_AS(regulib::classify_torus_case(so6), std::runtime_error);

  // A [4,2] datum whose weights match case 2 at ambient dimension 6 is
  // rejected by the dimension-6 exclusion.
  const QuadSpace split2(Matrix::from_rows(f2, {{1, 1}, {0, 0}}));
  const Matrix mixed = regulib::direct_sum(cycle4, regulib::jordan_block(f2, 2));
  const QuadSpace quad6(regulib::direct_sum(hyper4.quad(), split2.quad()));
  REQUIRE(regulib::is_isometry(mixed, quad6));
  REQUIRE(regulib::jordan_type(mixed) == jt({4, 2}));
  Weights mixed_w(6, std::vector<long long>(2, 0));
  for (std::size_t i = 0; i < 2; ++i) {
    mixed_w[i][i] = 1;
    mixed_w[2 + i][i] = -1;
  }
  const TorusNormalizerDatum guard6{DiagTorus(2, mixed_w, f2), mixed, quad6,
                                    "handcrafted", {}};
  CHECK_THROWS_AS(regulib::classify_torus_case(guard6), std::runtime_error);

  // Symplectic ambient: a swap of two opposed weight lines is a paired
  // tag-0 report.
  const SympSpace sp2 = SympSpace::standard(f2, 1);
  const Matrix swap2 = Matrix::from_rows(f2, {{0, 1}, {1, 0}});
  REQUIRE(regulib::is_isometry(swap2, sp2));
  const TorusNormalizerDatum sp_datum{DiagTorus(1, Weights{{1}, {-1}}, f2), swap2, sp2,
                                      "handcrafted", {}};
  const auto sp_report = regulib::classify_torus_case(sp_datum);
  CHECK(sp_report.case_tag == 0);
  CHECK(sp_report.common_weight_dim == 1);
}

TEST_CASE("containment_witness decides the equal-dimension biconditional") {
  // Over the full desk-scale grid of block-scalar wreath data, a witness
  // exists exactly when the common weight dimension exceeds 1.
  for (const unsigned p : {2u, 3u}) {
    for (unsigned a = 1;; ++a) {
      unsigned long long blocks = 1;
      for (unsigned i = 0; i < a; ++i) blocks *= p;
      if (blocks > 16) break;
      for (unsigned d = 1; blocks * d <= 16; ++d) {
        const auto datum = regulib::sl_wreath(p, a, d);
        const auto witness = regulib::containment_witness(datum);
        CHECK(witness.has_value() == (d > 1));
        if (witness) verify_witness(*witness, datum);
      }
    }
  }
}

TEST_CASE("the two certificate routes agree on existence") {
  // Whenever a nontrivial power of u centralizes the torus, the complete
  // fixed-line search must also deliver a subspace witness.
  const TorusNormalizerDatum data[] = {
      regulib::go_wreath(3, 1),
      regulib::go_wreath(5, 1),
      regulib::go_wreath(3, 2),
      regulib::so_pair_stab(4),
      regulib::so_pair_stab(6),
  };
  for (const auto& datum : data) {
    // Find the permutation order: the smallest centralizing power.
    const auto perm = regulib::normalizes_torus(datum.u, datum.torus);
    REQUIRE(perm.has_value());
    unsigned long long order = 1;
    std::vector<std::size_t> cur(perm->size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
    bool identity = false;
    while (!identity) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = (*perm)[cur[i]];
      identity = true;
      for (std::size_t i = 0; i < cur.size(); ++i) identity = identity && cur[i] == i;
      if (!identity) ++order;
    }
    const Matrix um = datum.u.pow(order);
    REQUIRE(!um.is_identity());
    REQUIRE(regulib::centralizes_torus(um, datum.torus));

    const auto witness = regulib::containment_witness(datum);
    REQUIRE(witness.has_value());
    CHECK(witness->kind == WitnessKind::invariant_totally_singular_subspace);
    verify_witness(*witness, datum);
  }
}

TEST_CASE("every form-preserving catalogue construction lives over GF(2)") {
  const TorusNormalizerDatum catalogue[] = {
      regulib::go_wreath(3, 1),
      regulib::so_pair_stab(4),
      regulib::so_orthsum(5),
      regulib::sl4_wedge(),
  };
  for (const auto& datum : catalogue) {
    REQUIRE(datum.ambient_form.has_value());
    CHECK(datum.torus.field().characteristic() == 2);
  }
}

TEST_CASE("parabolic_witness spins lines at the matrix level") {
  const FieldPrime f2(2);
  const FieldPrime f3(3);

  // The wreath element alone stabilizes a 2-dim subspace.
  const auto wreath = regulib::sl_wreath(2, 1, 2);
  const auto found = regulib::parabolic_witness({wreath.u}, std::nullopt);
  REQUIRE(found.has_value());
  CHECK(found->kind == WitnessKind::invariant_subspace);
  CHECK(witness_subspace(*found).dim() == 2);
  CHECK(invariant_under(witness_subspace(*found), wreath.u));

  // The two symmetric-square transvection images act irreducibly with no
  // central unipotent: certified absence.
  const std::vector<Matrix> sym2 = {
      Matrix::from_rows(f3, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}),
      Matrix::from_rows(f3, {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}})};
  CHECK_FALSE(regulib::parabolic_witness(sym2, std::nullopt).has_value());

  // On the split 2-dim quadratic space both singular lines spin to the
  // full space, so the only certificate is the Borel–Tits one: the
  // generator itself is a nontrivial central unipotent.
  const QuadSpace split2(Matrix::from_rows(f2, {{1, 1}, {0, 0}}));
  const Matrix j2 = regulib::jordan_block(f2, 2);
  REQUIRE(regulib::is_isometry(j2, split2));
  const auto bt = regulib::parabolic_witness({j2}, split2);
  REQUIRE(bt.has_value());
  CHECK(bt->kind == WitnessKind::centralized_unipotent);
  CHECK(std::get<Matrix>(bt->data) == j2);

  // A singular fixed line is found when one exists.
  const auto so3 = regulib::regular_in_so(3, 3);
  const auto line = regulib::parabolic_witness({so3.u}, std::get<QuadSpace>(*so3.space));
  REQUIRE(line.has_value());
  CHECK(line->kind == WitnessKind::invariant_totally_singular_subspace);

  // Dimension cap and ambient mismatch are errors.
  CHECK_THROWS_AS(regulib::parabolic_witness({Matrix::identity(f2, 24)}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(regulib::parabolic_witness({j2}, QuadSpace::hyperbolic(f2, 2)),
                  std::invalid_argument);
}

TEST_CASE("al2_outer_probe records raw outer-coset search data") {
  // The probe draws no structural conclusion; these are regression pins
  // of the deterministic search outputs.
  const auto rows = regulib::al2_outer_probe(6);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.subspace_found);
    CHECK(r.subspace_dim == 2);
  }
  CHECK(rows[0].l == 3);
  CHECK(rows[3].l == 6);
  CHECK_THROWS_AS(regulib::al2_outer_probe(2), std::invalid_argument);
}

TEST_CASE("cyclotomic companions attain the torus-dimension bound") {
  using regulib::IntMatrix;

  const IntMatrix c8 = regulib::cyclotomic_companion(2, 3);
  REQUIRE(c8.size() == 4);
  CHECK(regulib::integer_matrix_order(c8, 100) == 8);
  CHECK(regulib::min_torus_dim_for_order(2, 3) == 4);

  const IntMatrix c9 = regulib::cyclotomic_companion(3, 2);
  REQUIRE(c9.size() == 6);
  CHECK(regulib::integer_matrix_order(c9, 100) == 9);
  CHECK(regulib::min_torus_dim_for_order(3, 2) == 6);

  const IntMatrix c2 = regulib::cyclotomic_companion(2, 1);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0][0] == -1);
  CHECK(regulib::integer_matrix_order(c2, 10) == 2);
  CHECK(regulib::min_torus_dim_for_order(2, 1) == 1);

  CHECK(regulib::integer_matrix_order(regulib::cyclotomic_companion(2, 2), 100) == 4);
  CHECK(regulib::min_torus_dim_for_order(5, 1) == 4);

  // Cap semantics and input validation.
  CHECK_FALSE(regulib::integer_matrix_order(c8, 7).has_value());
  CHECK_THROWS_AS(regulib::cyclotomic_companion(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(regulib::cyclotomic_companion(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(regulib::integer_matrix_order(IntMatrix{}, 10), std::invalid_argument);
  CHECK_THROWS_AS(regulib::integer_matrix_order(IntMatrix{{1, 0}}, 10), std::invalid_argument);
  CHECK_THROWS_AS(regulib::min_torus_dim_for_order(6, 1), std::invalid_argument);
}

TEST_CASE("witness kinds print their JSON names") {
  CHECK(regulib::to_string(WitnessKind::invariant_subspace) == "invariant-subspace");
  CHECK(regulib::to_string(WitnessKind::invariant_totally_singular_subspace) ==
        "invariant-totally-singular-subspace");
  CHECK(regulib::to_string(WitnessKind::centralized_unipotent) == "centralized-unipotent");
}
