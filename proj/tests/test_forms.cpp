// SPDX-License-Identifier: MIT

#include "regulib/forms.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "regulib/jordan.hpp"

using regulib::BilinearKind;
using regulib::FieldPrime;
using regulib::Matrix;
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

// Characteristic-2 Eichler transformation x -> x + B(x,v)u + B(x,u)v +
// Q(v)B(x,u)u for singular u with v in u-perp; an isometry of (V, Q).
Matrix eichler2(const QuadSpace& space, const Matrix& u, const Matrix& v) {
  const std::size_t n = space.dim();
  const FieldPrime& f = space.field();
  Matrix g(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix x(f, 1, n);
    x.set(0, j, 1);
    const std::uint8_t bxv = space.b(x, v);
    const std::uint8_t bxu = space.b(x, u);
    for (std::size_t i = 0; i < n; ++i) {
      long long value = x.at(0, i);
      value += static_cast<long long>(f.mul(bxv, u.at(0, i)));
      value += static_cast<long long>(f.mul(bxu, v.at(0, i)));
      value += static_cast<long long>(f.mul(f.mul(space.q(v), bxu), u.at(0, i)));
      g.set(i, j, value);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("QuadSpace construction and polarization", "[forms][quadspace]") {
  FieldPrime f2(2), f3(3);

  SECTION("hyperbolic space") {
    QuadSpace h = QuadSpace::hyperbolic(f2, 2);
    CHECK(h.dim() == 4);
    CHECK(h.q(row(f2, {1, 0, 0, 0})) == 0);
    CHECK(h.q(row(f2, {1, 0, 1, 0})) == 1);
    CHECK(h.b(row(f2, {1, 0, 0, 0}), row(f2, {0, 0, 1, 0})) == 1);
    // Char 2: the Gram matrix is alternating.
    for (std::size_t i = 0; i < 4; ++i) CHECK(h.gram().at(i, i) == 0);
    CHECK(h.is_nondegenerate());
  }
  SECTION("polarization identity on random forms") {
    std::mt19937 rng(31);
    for (unsigned p : {2u, 3u, 5u}) {
      FieldPrime f(p);
      std::uniform_int_distribution<unsigned> dist(0, p - 1);
      for (int trial = 0; trial < 10; ++trial) {
        Matrix quad(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = i; j < 4; ++j) quad.set(i, j, dist(rng));
        }
        QuadSpace s(quad);
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = 0; j < 4; ++j) {
            Matrix ei(f, 1, 4), ej(f, 1, 4), sum(f, 1, 4);
            ei.set(0, i, 1);
            ej.set(0, j, 1);
            sum.set(0, i, 1);
            sum.set(0, j, static_cast<long long>(sum.at(0, j)) + 1);
            const std::uint8_t lhs = s.b(ei, ej);
            const std::uint8_t rhs = f.sub(f.sub(s.q(sum), s.q(ei)), s.q(ej));
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
  SECTION("odd orthogonal space is nondegenerate in both characteristics") {
    CHECK(QuadSpace::odd_orthogonal(f2, 2).is_nondegenerate());
    CHECK(QuadSpace::odd_orthogonal(f3, 2).is_nondegenerate());
  }
  SECTION("symmetric gram round-trip in odd characteristic") {
    Matrix gram = Matrix::from_rows(f3, {{2, 1}, {1, 0}});
    QuadSpace s = QuadSpace::from_symmetric_gram(gram);
    CHECK(s.gram() == gram);
    CHECK(s.q(row(f3, {1, 0})) == 1);
    CHECK_THROWS_AS(
        QuadSpace::from_symmetric_gram(Matrix::from_rows(f2, {{0, 1}, {1, 0}})),
        std::domain_error);
  }
  SECTION("lower-triangular junk is rejected") {
    CHECK_THROWS_AS(QuadSpace(Matrix::from_rows(f3, {{1, 0}, {1, 1}})),
                    std::invalid_argument);
  }
}

TEST_CASE("SympSpace validation", "[forms][sympspace]") {
  FieldPrime f3(3);
  CHECK(SympSpace::standard(f3, 2).dim() == 4);
  // Non-alternating and degenerate Gram matrices are rejected.
  CHECK_THROWS_AS(SympSpace(Matrix::identity(f3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(SympSpace(Matrix(f3, 2, 2)), std::invalid_argument);
}

TEST_CASE("is_isometry", "[forms][isometry]") {
  FieldPrime f2(2);

  SECTION("identity is always an isometry") {
    QuadSpace h = QuadSpace::hyperbolic(f2, 3);
    SympSpace s = SympSpace::standard(f2, 2);
    CHECK(regulib::is_isometry(Matrix::identity(f2, 6), h));
    CHECK(regulib::is_isometry(Matrix::identity(f2, 4), s));
  }
  SECTION("J_2 lies in Sp_2 = SL_2 over GF(2)") {
    CHECK(regulib::is_isometry(regulib::jordan_block(f2, 2), SympSpace::standard(f2, 1)));
  }
  SECTION("the e_i <-> f_i swap is an isometry of hyperbolic space") {
    for (std::size_t l : {2, 3, 4}) {
      QuadSpace h = QuadSpace::hyperbolic(f2, l);
      Matrix swap(f2, 2 * l, 2 * l);
      for (std::size_t i = 0; i < l; ++i) {
        swap.set(i, l + i, 1);
        swap.set(l + i, i, 1);
      }
      CHECK(regulib::is_isometry(swap, h));
    }
  }
  SECTION("a shear that moves Q is rejected") {
    QuadSpace h = QuadSpace::hyperbolic(f2, 1);
    // e_1 -> e_1, f_1 -> e_1 + f_1 preserves B but not Q.
    Matrix g = Matrix::from_rows(f2, {{1, 1}, {0, 1}});
    CHECK_FALSE(regulib::is_isometry(g, h));
  }
  SECTION("shape mismatch throws") {
    QuadSpace h = QuadSpace::hyperbolic(f2, 1);
    CHECK_THROWS_AS(regulib::is_isometry(Matrix::identity(f2, 3), h), std::invalid_argument);
  }
}

TEST_CASE("totally singular subspaces and perp", "[forms][subspace]") {
  FieldPrime f2(2);
  QuadSpace h = QuadSpace::hyperbolic(f2, 2);

  SECTION("pinned examples") {
    CHECK(regulib::is_totally_singular(SubspaceBasis(row(f2, {1, 0, 0, 0})), h));
    CHECK_FALSE(regulib::is_totally_singular(SubspaceBasis(row(f2, {1, 0, 1, 0})), h));
  }
  SECTION("perp of zero is everything") {
    SubspaceBasis z = SubspaceBasis::zero(f2, 4);
    CHECK(regulib::perp(z, h).dim() == 4);
  }
  SECTION("maximal totally singular subspace is self-perpendicular") {
    SubspaceBasis w(Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    REQUIRE(regulib::is_totally_singular(w, h));
    CHECK(regulib::perp(w, h) == w);
  }
  SECTION("perp dimensions are additive for nondegenerate pieces") {
    SubspaceBasis pair(Matrix::from_rows(f2, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
    SubspaceBasis pperp = regulib::perp(pair, h);
    CHECK(pperp.dim() == 2);
    CHECK(regulib::perp(pperp, h) == pair);
  }
  SECTION("double perp contains the original") {
    std::mt19937 rng(64);
    SympSpace s = SympSpace::standard(f2, 3);
    std::uniform_int_distribution<unsigned> dist(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m(f2, 2, 6);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 6; ++j) m.set(i, j, dist(rng));
      }
      SubspaceBasis sub(m);
      SubspaceBasis dd = regulib::perp(regulib::perp(sub, s), s);
      for (std::size_t i = 0; i < sub.dim(); ++i) {
        CHECK(dd.contains(sub.matrix().block(i, 0, 1, 6)));
      }
      CHECK(dd == sub);  // gram nondegenerate: equality
    }
  }
}

TEST_CASE("dickson invariant", "[forms][dickson]") {
  FieldPrime f2(2), f3(3);
  QuadSpace h = QuadSpace::hyperbolic(f2, 2);

  SECTION("identity has Dickson invariant 0") {
    CHECK(regulib::dickson(Matrix::identity(f2, 4), h) == 0);
  }
  SECTION("the e <-> f swap on one pair has Dickson invariant 1") {
    Matrix swap = Matrix::identity(f2, 4);
    swap.set(0, 0, 0);
    swap.set(2, 2, 0);
    swap.set(0, 2, 1);
    swap.set(2, 0, 1);
    REQUIRE(regulib::is_isometry(swap, h));
    CHECK(regulib::dickson(swap, h) == 1);
  }
  SECTION("wrong characteristic and non-isometries throw") {
    QuadSpace h3 = QuadSpace::hyperbolic(f3, 2);
    CHECK_THROWS_AS(regulib::dickson(Matrix::identity(f3, 4), h3), std::domain_error);
    Matrix g = Matrix::identity(f2, 4);
    g.set(0, 1, 1);  // not an isometry of h
    CHECK_THROWS_AS(regulib::dickson(g, h), std::domain_error);
  }
  SECTION("dickson is a homomorphism on random isometries of GO_4, GO_6, GO_8") {
    std::mt19937 rng(20260401);
    for (std::size_t l : {2, 3, 4}) {
      QuadSpace space = QuadSpace::hyperbolic(f2, l);
      const std::size_t n = 2 * l;
      // Random isometries: products of Eichler maps (Dickson 0) and the
      // one-pair swap (Dickson 1).
      Matrix swap1 = Matrix::identity(f2, n);
      swap1.set(0, 0, 0);
      swap1.set(l, l, 0);
      swap1.set(0, l, 1);
      swap1.set(l, 0, 1);
      auto random_isometry = [&]() {
        Matrix g = Matrix::identity(f2, n);
        std::uniform_int_distribution<unsigned> bit(0, 1);
        for (int step = 0; step < 6; ++step) {
          if (bit(rng)) {
            g = g * swap1;
          } else {
            // u = e_1 is singular; pick v in u-perp = span(all but f_1).
            Matrix u(f2, 1, n), v(f2, 1, n);
            u.set(0, 0, 1);
            for (std::size_t j = 0; j < n; ++j) {
              if (j != l) v.set(0, j, bit(rng));
            }
            g = g * eichler2(space, u, v);
          }
        }
        return g;
      };
      for (int trial = 0; trial < 8; ++trial) {
        Matrix a = random_isometry();
        Matrix b = random_isometry();
        REQUIRE(regulib::is_isometry(a, space));
        REQUIRE(regulib::is_isometry(b, space));
        CHECK(regulib::dickson(a * b, space) ==
              (regulib::dickson(a, space) + regulib::dickson(b, space)) % 2);
      }
    }
  }
}

TEST_CASE("invariant bilinear forms", "[forms][solver]") {
  FieldPrime f3(3);

  SECTION("J_2 over GF(3): one alternating form, the symplectic one") {
    auto basis = regulib::invariant_bilinear_forms(regulib::jordan_block(f3, 2),
                                                   BilinearKind::alternating);
    REQUIRE(basis.size() == 1);
    CHECK(regulib::rank(basis[0]) == 2);
    CHECK(basis[0].at(0, 0) == 0);
    CHECK(basis[0].at(0, 1) == f3.neg(basis[0].at(1, 0)));
  }
  SECTION("J_2l in odd characteristic admits a nondegenerate alternating form") {
    for (std::size_t l : {1, 2, 3}) {
      auto basis = regulib::invariant_bilinear_forms(regulib::jordan_block(f3, 2 * l),
                                                     BilinearKind::alternating);
      auto b = regulib::first_nondegenerate_gram(basis);
      REQUIRE(b.has_value());
      Matrix u = regulib::jordan_block(f3, 2 * l);
      CHECK(u.transpose() * *b * u == *b);
      CHECK(regulib::rank(*b) == 2 * l);
    }
  }
  SECTION("J_{2l+1} in odd characteristic admits a nondegenerate symmetric form") {
    for (std::size_t l : {1, 2, 3}) {
      auto basis = regulib::invariant_bilinear_forms(regulib::jordan_block(f3, 2 * l + 1),
                                                     BilinearKind::symmetric);
      auto b = regulib::first_nondegenerate_gram(basis);
      REQUIRE(b.has_value());
      Matrix u = regulib::jordan_block(f3, 2 * l + 1);
      CHECK(u.transpose() * *b * u == *b);
      CHECK(*b == b->transpose());
    }
  }
  SECTION("every returned form is invariant by substitution") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<unsigned> dist(0, 2);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix g(f3, 3, 3);
      do {
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) g.set(i, j, dist(rng));
        }
      } while (regulib::rank(g) != 3);
      for (auto kind : {BilinearKind::alternating, BilinearKind::symmetric}) {
        for (const Matrix& b : regulib::invariant_bilinear_forms(g, kind)) {
          CHECK(g.transpose() * b * g == b);
        }
      }
    }
  }
  SECTION("singular input throws") {
    CHECK_THROWS_AS(regulib::invariant_bilinear_forms(Matrix(f3, 2, 2),
                                                      BilinearKind::symmetric),
                    std::domain_error);
  }
}

TEST_CASE("invariant quadratic forms in characteristic 2", "[forms][solver]") {
  FieldPrime f2(2), f3(3);

  SECTION("u = I fixes all quadratic forms") {
    auto basis = regulib::invariant_quadratic_forms(Matrix::identity(f2, 3));
    CHECK(basis.size() == 6);  // dim n(n+1)/2 = 6
  }
  SECTION("J_2l over GF(2) admits a nondegenerate invariant Q") {
    for (std::size_t l : {1, 2, 3, 4}) {
      Matrix u = regulib::jordan_block(f2, 2 * l);
      auto basis = regulib::invariant_quadratic_forms(u);
      auto space = regulib::first_nondegenerate_quadratic(basis);
      REQUIRE(space.has_value());
      CHECK(regulib::is_isometry(u, *space));
      CHECK(space->is_nondegenerate());
      // Single block of even size has odd nilpotent rank: Dickson 1.
      CHECK(regulib::dickson(u, *space) == 1);
    }
  }
  SECTION("J_2 + J_2 has a >= 2-dim solution space containing a hyperbolic form") {
    Matrix u = regulib::direct_sum(regulib::jordan_block(f2, 2), regulib::jordan_block(f2, 2));
    auto basis = regulib::invariant_quadratic_forms(u);
    CHECK(basis.size() >= 2);

    // Scan the whole (small) solution space for a hyperbolic member: over
    // GF(2) in dim 4 a nondegenerate Q is hyperbolic iff it has 9 nonzero
    // singular vectors (5 for the elliptic type).
    bool found_hyperbolic = false;
    for (unsigned mask = 1; mask < (1u << basis.size()) && !found_hyperbolic; ++mask) {
      Matrix quad(f2, 4, 4);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (mask & (1u << i)) quad = quad + basis[i].quad();
      }
      QuadSpace s(quad);
      if (!s.is_nondegenerate()) continue;
      int singular = 0;
      for (unsigned v = 1; v < 16; ++v) {
        Matrix vec(f2, 1, 4);
        for (std::size_t j = 0; j < 4; ++j) vec.set(0, j, (v >> j) & 1);
        if (s.q(vec) == 0) ++singular;
      }
      found_hyperbolic = singular == 9;
    }
    CHECK(found_hyperbolic);
  }
  SECTION("odd characteristic throws") {
    CHECK_THROWS_AS(regulib::invariant_quadratic_forms(Matrix::identity(f3, 2)),
                    std::domain_error);
  }
}
