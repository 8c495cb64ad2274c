// SPDX-License-Identifier: MIT

#include "regulib/classical.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace regulib {

namespace {

Matrix solved_gram(const Matrix& u, BilinearKind kind) {
  const auto basis = invariant_bilinear_forms(u, kind);
  auto gram = first_nondegenerate_gram(basis);
  if (!gram) {
    throw std::runtime_error(
        "no nondegenerate invariant bilinear form exists for the requested "
        "unipotent block");
  }
  return *std::move(gram);
}

QuadSpace solved_quadratic(const Matrix& u) {
  auto space = first_nondegenerate_quadratic(invariant_quadratic_forms(u));
  if (!space) {
    throw std::runtime_error(
        "no nondegenerate invariant quadratic form exists for the requested "
        "unipotent block");
  }
  return *std::move(space);
}

Matrix row_of(const Matrix& m, std::size_t i) {
  return m.block(i, 0, 1, m.cols());
}

// Outer product a^T b of two 1 x n rows.
Matrix outer(const Matrix& a, const Matrix& b) { return a.transpose() * b; }

bool is_zero_row(const Matrix& v) { return v.is_zero(); }

// True when v = c * u for some scalar c (both 1 x n, u nonzero).
bool proportional(const Matrix& v, const Matrix& u) {
  const FieldPrime f = u.field();
  std::size_t lead = u.cols();
  for (std::size_t j = 0; j < u.cols(); ++j) {
    if (u.at(0, j) != 0) {
      lead = j;
      break;
    }
  }
  if (lead == u.cols()) return is_zero_row(v);
  const std::uint8_t c = f.mul(v.at(0, lead), f.inv(u.at(0, lead)));
  return v == u.scaled(c);
}

// Drops from the row space of R everything that pairs nontrivially with s
// or t under the bilinear form with Gram matrix gram.
Matrix contract_rows(const Matrix& R, const Matrix& gram, const Matrix& s,
                     const Matrix& t) {
  const Matrix conditions = R * gram * vstack(s, t).transpose();  // k x 2
  const Matrix coeffs = kernel_basis(conditions.transpose());     // (k-2) x k
  return coeffs * R;
}

// Hyperbolic-pair vectors (s_1, t_1, s_2, t_2, ...) of a quadratic space:
// Q(s_i) = Q(t_i) = 0, B(s_i, t_i) = 1, distinct pairs orthogonal.  The
// search for singular vectors scans single rows, then two-row and
// three-row combinations of the shrinking section basis; at desk scale
// every solved split form yields its full Witt index this way.
std::vector<Matrix> pair_vectors(const QuadSpace& space) {
  const FieldPrime f = space.field();
  const unsigned p = f.characteristic();
  Matrix R = Matrix::identity(f, space.dim());
  std::vector<Matrix> pairs;

  while (R.rows() >= 2) {
    const std::size_t k = R.rows();
    std::optional<Matrix> singular;
    auto admit = [&](Matrix v) {
      if (space.q(v) != 0) return false;
      for (std::size_t j = 0; j < k; ++j) {
        if (space.b(v, row_of(R, j)) != 0) {
          singular = std::move(v);
          return true;
        }
      }
      return false;
    };

    for (std::size_t i = 0; i < k && !singular; ++i) admit(row_of(R, i));
    for (std::size_t i = 0; i < k && !singular; ++i) {
      for (std::size_t j = i + 1; j < k && !singular; ++j) {
        for (unsigned a = 1; a < p && !singular; ++a) {
          admit(row_of(R, i) + row_of(R, j).scaled(static_cast<std::uint8_t>(a)));
        }
      }
    }
    for (std::size_t i = 0; i < k && !singular; ++i) {
      for (std::size_t j = i + 1; j < k && !singular; ++j) {
        for (std::size_t m = j + 1; m < k && !singular; ++m) {
          for (unsigned a = 0; a < p && !singular; ++a) {
            for (unsigned b = 0; b < p && !singular; ++b) {
              admit(row_of(R, i) +
                    row_of(R, j).scaled(static_cast<std::uint8_t>(a)) +
                    row_of(R, m).scaled(static_cast<std::uint8_t>(b)));
            }
          }
        }
      }
    }
    if (!singular) break;  // remainder is anisotropic (or radical)

    const Matrix s = *singular;
    std::optional<Matrix> partner;
    for (std::size_t j = 0; j < k && !partner; ++j) {
      if (space.b(s, row_of(R, j)) != 0) partner = row_of(R, j);
    }
    Matrix t = partner->scaled(f.inv(space.b(s, *partner)));
    // Make t singular: Q(t + c s) = Q(t) + c when B(s, t) = 1.
    t = t + s.scaled(f.neg(space.q(t)));
    pairs.push_back(s);
    pairs.push_back(t);
    R = contract_rows(R, space.gram(), s, t);
  }
  return pairs;
}

// Hyperbolic-pair vectors of a nondegenerate alternating space.
std::vector<Matrix> pair_vectors(const SympSpace& space) {
  const FieldPrime f = space.field();
  Matrix R = Matrix::identity(f, space.dim());
  std::vector<Matrix> pairs;

  while (R.rows() >= 2) {
    const std::size_t k = R.rows();
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t i = 0; i < k && !hit; ++i) {
      for (std::size_t j = i + 1; j < k && !hit; ++j) {
        if (space.b(row_of(R, i), row_of(R, j)) != 0) hit = {i, j};
      }
    }
    if (!hit) break;
    const Matrix s = row_of(R, hit->first);
    Matrix t = row_of(R, hit->second);
    t = t.scaled(f.inv(space.b(s, t)));
    pairs.push_back(s);
    pairs.push_back(t);
    R = contract_rows(R, space.gram(), s, t);
  }
  return pairs;
}

// E_{u,v}: x -> x + B(x,v) u - B(x,u) v - Q(v) B(x,u) u, for singular u
// and v perpendicular to u.  Fixes Q; rank(E - I) = 2 whenever the
// functionals B(u, .) and B(v, .) are independent, so the Dickson
// invariant is 0 in characteristic 2.
Matrix eichler(const QuadSpace& space, const Matrix& u, const Matrix& v) {
  const FieldPrime f = space.field();
  const Matrix uG = u * space.gram();
  const Matrix vG = v * space.gram();
  return Matrix::identity(f, space.dim()) + outer(u, vG) - outer(v, uG) -
         outer(u, uG).scaled(space.q(v));
}

void push_unique(std::vector<Matrix>& out, Matrix m) {
  if (m.is_identity()) return;
  if (std::find(out.begin(), out.end(), m) == out.end()) {
    out.push_back(std::move(m));
  }
}

}  // namespace

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::SL:
      return "SL";
    case GroupTag::Sp:
      return "Sp";
    case GroupTag::SO_odd:
      return "SO_odd";
    case GroupTag::SO_even:
      return "SO_even";
    case GroupTag::GO_outer:
      return "GO_outer";
    case GroupTag::GLl2_outer:
      return "GLl2_outer";
  }
  throw std::logic_error("unknown GroupTag");
}

RegularRep regular_in_sl(unsigned n, unsigned p) {
  const FieldPrime f(p);
  if (n < 2) throw std::invalid_argument("regular_in_sl requires n >= 2");
  return {GroupTag::SL, n,           p,
          jordan_block(f, n),        std::nullopt,
          JordanType({n})};
}

RegularRep regular_in_sp(unsigned n, unsigned p) {
  const FieldPrime f(p);
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("regular_in_sp requires even n >= 2");
  }
  Matrix u = jordan_block(f, n);
  SympSpace space(solved_gram(u, BilinearKind::alternating));
  return {GroupTag::Sp, n, p, std::move(u), std::move(space), JordanType({n})};
}

RegularRep regular_in_so(unsigned n, unsigned p) {
  const FieldPrime f(p);
  if (n % 2 == 1) {
    if (n < 3) throw std::invalid_argument("regular_in_so requires odd n >= 3");
    if (p == 2) {
      throw std::invalid_argument(
          "odd-dimensional orthogonal groups in characteristic 2 are served "
          "through the symplectic group; use regular_in_sp");
    }
    Matrix u = jordan_block(f, n);
    QuadSpace space = QuadSpace::from_symmetric_gram(
        solved_gram(u, BilinearKind::symmetric));
    return {GroupTag::SO_odd, n,           p, std::move(u), std::move(space),
            JordanType({n})};
  }
  if (n < 6) throw std::invalid_argument("regular_in_so requires even n >= 6");
  if (p != 2) {
    Matrix big = jordan_block(f, n - 1);
    Matrix gram =
        direct_sum(solved_gram(big, BilinearKind::symmetric),
                   Matrix::identity(f, 1));
    Matrix u = direct_sum(big, Matrix::identity(f, 1));
    return {GroupTag::SO_even,
            n,
            p,
            std::move(u),
            QuadSpace::from_symmetric_gram(gram),
            JordanType({n - 1, 1})};
  }
  Matrix big = jordan_block(f, n - 2);
  const QuadSpace q_big = solved_quadratic(big);
  Matrix small = jordan_block(f, 2);
  const QuadSpace q_small = solved_quadratic(small);
  Matrix u = direct_sum(big, small);
  QuadSpace space(direct_sum(q_big.quad(), q_small.quad()));
  return {GroupTag::SO_even, n,           p, std::move(u), std::move(space),
          JordanType({n - 2, 2})};
}

RegularRep go_outer_regular(unsigned n, unsigned p) {
  const FieldPrime f(p);
  if (p != 2) {
    throw std::invalid_argument(
        "go_outer_regular is the Dickson-1 coset construction and requires "
        "characteristic 2");
  }
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("go_outer_regular requires even n >= 4");
  }
  Matrix u = jordan_block(f, n);
  QuadSpace space = solved_quadratic(u);
  return {GroupTag::GO_outer, n,           p, std::move(u), std::move(space),
          JordanType({n})};
}

RegularRep gl_stab_outer(unsigned l, unsigned p) {
  if (p != 2) {
    throw std::invalid_argument("gl_stab_outer requires characteristic 2");
  }
  if (l < 3) throw std::invalid_argument("gl_stab_outer requires l >= 3");
  const FieldPrime f(2);

  const JordanType half_target =
      l % 2 == 1 ? JordanType({l}) : JordanType({l - 1, 1});

  // Deterministic search for g with g^{-T} g unipotent of profile
  // half_target: enumerate unipotent upper-triangular matrices by a
  // row-major bit counter, then (if the triangular space is exhausted
  // without a hit) sample full matrices pseudorandomly with a fixed seed.
  constexpr std::uint64_t kCandidateCap = 1'000'000;
  constexpr std::uint64_t kSearchSeed = 20260816;

  std::vector<std::pair<unsigned, unsigned>> positions;
  for (unsigned i = 0; i < l; ++i) {
    for (unsigned j = i + 1; j < l; ++j) positions.emplace_back(i, j);
  }
  const std::size_t npos = positions.size();
  const std::uint64_t enum_count =
      npos >= 63 ? kCandidateCap
                 : std::min<std::uint64_t>(std::uint64_t{1} << npos,
                                           kCandidateCap);

  std::optional<Matrix> found;
  auto consider = [&](const Matrix& g) {
    const auto gi = inverse(g);
    if (!gi) return false;
    const Matrix x = gi->transpose() * g;
    return is_unipotent(x) && jordan_type(x) == half_target;
  };

  for (std::uint64_t c = 0; c < enum_count && !found; ++c) {
    Matrix g = Matrix::identity(f, l);
    for (std::size_t idx = 0; idx < npos; ++idx) {
      const std::size_t shift = npos - 1 - idx;
      const long long bit = shift < 64 ? static_cast<long long>((c >> shift) & 1) : 0;
      g.set(positions[idx].first, positions[idx].second, bit);
    }
    if (consider(g)) found = std::move(g);
  }
  if (!found && enum_count < kCandidateCap) {
    std::mt19937_64 rng(kSearchSeed);
    for (std::uint64_t c = enum_count; c < kCandidateCap && !found; ++c) {
      Matrix g(f, l, l);
      for (unsigned i = 0; i < l; ++i) {
        for (unsigned j = 0; j < l; ++j) {
          g.set(i, j, static_cast<long long>(rng() & 1));
        }
      }
      if (consider(g)) found = std::move(g);
    }
  }
  if (!found) {
    throw std::runtime_error(
        "gl_stab_outer: no admissible g within the search cap of 1000000 "
        "candidates");
  }

  const Matrix git = inverse(*found)->transpose();
  Matrix u(f, 2 * std::size_t{l}, 2 * std::size_t{l});
  u.set_block(0, l, git);
  u.set_block(l, 0, *found);
  const JordanType expected =
      l % 2 == 1 ? JordanType({2 * l}) : JordanType({2 * l - 2, 2});
  return {GroupTag::GLl2_outer, l,           2, std::move(u),
          QuadSpace::hyperbolic(f, l),       expected};
}

std::vector<Matrix> isometry_generators(const QuadSpace& space) {
  std::vector<Matrix> out;
  for (const Matrix& u : pair_vectors(space)) {
    const Matrix uG = u * space.gram();
    const Matrix perp_basis = kernel_basis(uG);
    for (std::size_t r = 0; r < perp_basis.rows(); ++r) {
      const Matrix v = row_of(perp_basis, r);
      if (proportional(v, u)) continue;
      // Skip directions whose polarization functional vanishes (the
      // bilinear radical in odd dimension over GF(2)): those would add
      // rank-1 transvections, which lie outside the Dickson kernel.
      if ((v * space.gram()).is_zero()) continue;
      push_unique(out, eichler(space, u, v));
    }
  }
  return out;
}

std::vector<Matrix> isometry_generators(const SympSpace& space) {
  const FieldPrime f = space.field();
  const Matrix& G = space.gram();
  const std::vector<Matrix> pv = pair_vectors(space);
  const std::size_t w = pv.size() / 2;
  const Matrix id = Matrix::identity(f, space.dim());

  std::vector<Matrix> out;
  for (const Matrix& v : pv) {
    push_unique(out, id + outer(v, v * G));  // transvection along v
  }
  auto mix = [&](const Matrix& a, const Matrix& b) {
    push_unique(out, id - outer(a, b * G) - outer(b, a * G));
  };
  for (std::size_t i = 0; i + 1 < w; ++i) {
    const Matrix& s0 = pv[2 * i];
    const Matrix& t0 = pv[2 * i + 1];
    const Matrix& s1 = pv[2 * i + 2];
    const Matrix& t1 = pv[2 * i + 3];
    mix(s0, s1);
    mix(t0, t1);
    mix(s0, t1);
    mix(t0, s1);
  }
  return out;
}

}  // namespace regulib
