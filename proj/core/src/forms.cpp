// SPDX-License-Identifier: MIT

#include "regulib/forms.hpp"

#include <stdexcept>
#include <utility>

namespace regulib {

namespace {

// Coordinate extraction: accepts a 1 x n row or an n x 1 column.
std::vector<std::uint8_t> coords(const Matrix& v, std::size_t n) {
  if (v.rows() == 1 && v.cols() == n) {
    return v.data();
  }
  if (v.cols() == 1 && v.rows() == n) {
    return v.data();
  }
  throw std::invalid_argument("forms: vector has wrong shape for this space");
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadSpace
// ---------------------------------------------------------------------------

QuadSpace::QuadSpace(Matrix quad) : quad_(std::move(quad)), gram_(quad_.field(), 0, 0) {
  if (!quad_.is_square()) {
    throw std::invalid_argument("QuadSpace: coefficient matrix must be square");
  }
  for (std::size_t i = 0; i < quad_.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (quad_.at(i, j) != 0) {
        throw std::invalid_argument("QuadSpace: coefficient matrix must be upper-triangular");
      }
    }
  }
  gram_ = quad_ + quad_.transpose();
}

QuadSpace QuadSpace::hyperbolic(const FieldPrime& f, std::size_t l) {
  Matrix quad(f, 2 * l, 2 * l);
  for (std::size_t i = 0; i < l; ++i) quad.set(i, l + i, 1);
  return QuadSpace(std::move(quad));
}

QuadSpace QuadSpace::odd_orthogonal(const FieldPrime& f, std::size_t l) {
  Matrix quad(f, 2 * l + 1, 2 * l + 1);
  for (std::size_t i = 0; i < l; ++i) quad.set(i, l + i, 1);
  quad.set(2 * l, 2 * l, 1);
  return QuadSpace(std::move(quad));
}

QuadSpace QuadSpace::from_symmetric_gram(const Matrix& gram) {
  const FieldPrime& f = gram.field();
  if (f.characteristic() == 2) {
    throw std::domain_error("QuadSpace::from_symmetric_gram: needs odd characteristic");
  }
  if (!gram.is_square() || gram != gram.transpose()) {
    throw std::invalid_argument("QuadSpace::from_symmetric_gram: matrix must be symmetric");
  }
  const std::uint8_t half = f.inv(2);
  Matrix quad(f, gram.rows(), gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    quad.set(i, i, f.mul(gram.at(i, i), half));
    for (std::size_t j = i + 1; j < gram.rows(); ++j) quad.set(i, j, gram.at(i, j));
  }
  return QuadSpace(std::move(quad));
}

std::uint8_t QuadSpace::q(const Matrix& v) const {
  const std::vector<std::uint8_t> x = coords(v, dim());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = i; j < x.size(); ++j) {
      acc += std::uint64_t{quad_.at(i, j)} * x[i] * x[j];
    }
  }
  return static_cast<std::uint8_t>(acc % field().characteristic());
}

std::uint8_t QuadSpace::b(const Matrix& v, const Matrix& w) const {
  const std::vector<std::uint8_t> x = coords(v, dim());
  const std::vector<std::uint8_t> y = coords(w, dim());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc += std::uint64_t{x[i]} * gram_.at(i, j) * y[j];
    }
  }
  return static_cast<std::uint8_t>(acc % field().characteristic());
}

bool QuadSpace::is_nondegenerate() const {
  const Matrix radical = kernel_basis(gram_);
  if (radical.rows() == 0) return true;
  // A one-dimensional Gram radical is tolerated exactly when Q does not
  // vanish on it (the odd-dimensional characteristic-2 case; in odd
  // characteristic Q(r) = B(r, r)/2 = 0, so this never fires there).
  return radical.rows() == 1 && q(radical) != 0;
}

// ---------------------------------------------------------------------------
// SympSpace
// ---------------------------------------------------------------------------

SympSpace::SympSpace(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw std::invalid_argument("SympSpace: Gram matrix must be square");
  const FieldPrime& f = gram_.field();
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_.at(i, i) != 0) {
      throw std::invalid_argument("SympSpace: Gram matrix must have zero diagonal");
    }
    for (std::size_t j = 0; j < gram_.rows(); ++j) {
      if (gram_.at(i, j) != f.neg(gram_.at(j, i))) {
        throw std::invalid_argument("SympSpace: Gram matrix must be alternating");
      }
    }
  }
  if (gram_.rows() % 2 != 0 || rank(gram_) != gram_.rows()) {
    throw std::invalid_argument("SympSpace: Gram matrix must be nondegenerate of even dim");
  }
}

SympSpace SympSpace::standard(const FieldPrime& f, std::size_t l) {
  Matrix gram(f, 2 * l, 2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    gram.set(i, l + i, 1);
    gram.set(l + i, i, -1);
  }
  return SympSpace(std::move(gram));
}

std::uint8_t SympSpace::b(const Matrix& v, const Matrix& w) const {
  const std::vector<std::uint8_t> x = coords(v, dim());
  const std::vector<std::uint8_t> y = coords(w, dim());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc += std::uint64_t{x[i]} * gram_.at(i, j) * y[j];
    }
  }
  return static_cast<std::uint8_t>(acc % field().characteristic());
}

// ---------------------------------------------------------------------------
// SubspaceBasis
// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(const Matrix& m) : basis_(row_echelon_basis(m)) {}

SubspaceBasis SubspaceBasis::zero(const FieldPrime& f, std::size_t ambient_dim) {
  return SubspaceBasis(Matrix(f, 0, ambient_dim));
}

bool SubspaceBasis::contains(const Matrix& v) const {
  if (v.rows() != 1 || v.cols() != ambient_dim()) {
    throw std::invalid_argument("SubspaceBasis::contains: expected a 1 x dim row vector");
  }
  return rank(vstack(basis_, v)) == dim();
}

// ---------------------------------------------------------------------------
// Membership and subspace predicates
// ---------------------------------------------------------------------------

bool is_isometry(const Matrix& g, const QuadSpace& space) {
  if (!g.is_square() || g.rows() != space.dim() || g.field() != space.field()) {
    throw std::invalid_argument("is_isometry: shape or field mismatch");
  }
  if (g.transpose() * space.gram() * g != space.gram()) return false;
  // With B preserved, checking Q on basis vectors settles Q(gv) = Q(v).
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (space.q(g.block(0, i, space.dim(), 1)) != space.quad().at(i, i)) return false;
  }
  return true;
}

bool is_isometry(const Matrix& g, const SympSpace& space) {
  if (!g.is_square() || g.rows() != space.dim() || g.field() != space.field()) {
    throw std::invalid_argument("is_isometry: shape or field mismatch");
  }
  return g.transpose() * space.gram() * g == space.gram();
}

bool is_totally_singular(const SubspaceBasis& s, const QuadSpace& space) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Matrix vi = s.matrix().block(i, 0, 1, s.ambient_dim());
    if (space.q(vi) != 0) return false;
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      if (space.b(vi, s.matrix().block(j, 0, 1, s.ambient_dim())) != 0) return false;
    }
  }
  return true;
}

bool is_totally_isotropic(const SubspaceBasis& s, const SympSpace& space) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Matrix vi = s.matrix().block(i, 0, 1, s.ambient_dim());
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      if (space.b(vi, s.matrix().block(j, 0, 1, s.ambient_dim())) != 0) return false;
    }
  }
  return true;
}

namespace {

SubspaceBasis perp_impl(const SubspaceBasis& s, const Matrix& gram) {
  // x is perpendicular to all of s iff (s.matrix() * gram) x = 0.
  return SubspaceBasis(kernel_basis(s.matrix() * gram));
}

}  // namespace

SubspaceBasis perp(const SubspaceBasis& s, const QuadSpace& space) {
  return perp_impl(s, space.gram());
}

SubspaceBasis perp(const SubspaceBasis& s, const SympSpace& space) {
  return perp_impl(s, space.gram());
}

unsigned dickson(const Matrix& g, const QuadSpace& space) {
  if (space.field().characteristic() != 2) {
    throw std::domain_error("dickson: defined only in characteristic 2");
  }
  if (!is_isometry(g, space)) {
    throw std::domain_error("dickson: matrix is not an isometry of the space");
  }
  return static_cast<unsigned>(rank(g - Matrix::identity(g.field(), g.rows())) % 2);
}

// ---------------------------------------------------------------------------
// Invariant-form solvers
// ---------------------------------------------------------------------------

std::vector<Matrix> invariant_bilinear_forms(const Matrix& u, BilinearKind kind) {
  if (!u.is_square() || rank(u) != u.rows()) {
    throw std::domain_error("invariant_bilinear_forms: matrix must be invertible");
  }
  const std::size_t n = u.rows();
  const FieldPrime& f = u.field();
  const bool symmetric = kind == BilinearKind::symmetric;

  // Unknowns: b_{ij} for i <= j (symmetric) or i < j (alternating).
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) unknowns.emplace_back(i, j);
  }

  // Entry of the candidate B at (k, l) as a coefficient vector over the
  // unknowns: symmetric extends by b_{lk} = b_{kl}, alternating by
  // b_{lk} = -b_{kl} with zero diagonal.
  const auto entry_coeff = [&](std::size_t k, std::size_t l,
                               std::size_t unknown) -> std::uint8_t {
    const auto [a, c] = unknowns[unknown];
    if (k == a && l == c) return 1;
    if (k == c && l == a && a != c) return symmetric ? std::uint8_t{1} : f.neg(1);
    return 0;
  };

  // Equations: (u^T B u - B)_{rs} = 0 over the same index range as the
  // unknowns (the remaining entries follow by (anti)symmetry).
  Matrix system(f, unknowns.size(), unknowns.size());
  for (std::size_t eq = 0; eq < unknowns.size(); ++eq) {
    const auto [r, s] = unknowns[eq];
    for (std::size_t x = 0; x < unknowns.size(); ++x) {
      std::uint64_t acc = 0;
      const auto [a, c] = unknowns[x];
      // Only B-entries touching rows {a, c} contribute.
      acc += std::uint64_t{u.at(a, r)} * entry_coeff(a, c, x) * u.at(c, s);
      if (a != c) acc += std::uint64_t{u.at(c, r)} * entry_coeff(c, a, x) * u.at(a, s);
      long long value = static_cast<long long>(acc % f.characteristic());
      if (eq == x) value -= 1;
      system.set(eq, x, value);
    }
  }

  const Matrix solutions = kernel_basis(system);
  std::vector<Matrix> out;
  out.reserve(solutions.rows());
  for (std::size_t sln = 0; sln < solutions.rows(); ++sln) {
    Matrix b(f, n, n);
    for (std::size_t x = 0; x < unknowns.size(); ++x) {
      const auto [a, c] = unknowns[x];
      const std::uint8_t v = solutions.at(sln, x);
      b.set(a, c, v);
      if (a != c) b.set(c, a, symmetric ? v : f.neg(v));
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<QuadSpace> invariant_quadratic_forms(const Matrix& u) {
  const FieldPrime& f = u.field();
  if (f.characteristic() != 2) {
    throw std::domain_error("invariant_quadratic_forms: defined only in characteristic 2");
  }
  if (!u.is_square() || rank(u) != u.rows()) {
    throw std::domain_error("invariant_quadratic_forms: matrix must be invertible");
  }
  const std::size_t n = u.rows();

  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) unknowns.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < unknowns.size(); ++x) {
    index[unknowns[x].first][unknowns[x].second] = x;
    index[unknowns[x].second][unknowns[x].first] = x;
  }

  // Equations: Q(u e_j) = Q(e_j) for each j, plus invariance of the
  // polarized Gram matrix (whose (k, l) entry, k != l, is q_{kl}).
  std::vector<std::vector<std::uint8_t>> eqs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint8_t> row(unknowns.size(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (u.at(a, j) == 0) continue;
      for (std::size_t c = a; c < n; ++c) {
        const std::uint8_t coeff = f.mul(u.at(a, j), u.at(c, j));
        const std::size_t x = index[a][c];
        row[x] = f.add(row[x], coeff);
      }
    }
    const std::size_t self = index[j][j];
    row[self] = f.sub(row[self], 1);
    eqs.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      std::vector<std::uint8_t> row(unknowns.size(), 0);
      // (u^T G u)_{rs} = sum_{a != c} u_{ar} q_{min(a,c),max(a,c)} u_{cs}.
      for (std::size_t a = 0; a < n; ++a) {
        if (u.at(a, r) == 0) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (a == c || u.at(c, s) == 0) continue;
          const std::size_t x = index[a][c];
          row[x] = f.add(row[x], f.mul(u.at(a, r), u.at(c, s)));
        }
      }
      const std::size_t self = index[r][s];
      row[self] = f.sub(row[self], 1);
      eqs.push_back(std::move(row));
    }
  }

  Matrix system(f, eqs.size(), unknowns.size());
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t x = 0; x < unknowns.size(); ++x) system.set(i, x, eqs[i][x]);
  }

  const Matrix solutions = kernel_basis(system);
  std::vector<QuadSpace> out;
  out.reserve(solutions.rows());
  for (std::size_t sln = 0; sln < solutions.rows(); ++sln) {
    Matrix quad(f, n, n);
    for (std::size_t x = 0; x < unknowns.size(); ++x) {
      quad.set(unknowns[x].first, unknowns[x].second, solutions.at(sln, x));
    }
    out.emplace_back(std::move(quad));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic nondegenerate representatives
// ---------------------------------------------------------------------------

namespace {

// Walks nonzero coefficient vectors (c_1, ..., c_k) in lexicographic order
// (c_1 most significant) and returns the first combination accepted by
// `take`.  Enumeration is capped to keep pathological inputs finite.
template <typename Combine, typename Accept>
auto first_lex_combination(unsigned p, std::size_t k, const Combine& combine,
                           const Accept& accept)
    -> std::optional<decltype(combine(std::vector<std::uint8_t>{}))> {
  constexpr std::uint64_t kCap = 1ULL << 22;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= p;
    if (total > kCap) { total = kCap; break; }
  }
  for (std::uint64_t t = 1; t < total; ++t) {
    std::vector<std::uint8_t> c(k, 0);
    std::uint64_t rest = t;
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    auto candidate = combine(c);
    if (accept(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Matrix> first_nondegenerate_gram(const std::vector<Matrix>& basis) {
  if (basis.empty()) return std::nullopt;
  const FieldPrime& f = basis.front().field();
  const std::size_t n = basis.front().rows();
  return first_lex_combination(
      f.characteristic(), basis.size(),
      [&](const std::vector<std::uint8_t>& c) {
        Matrix sum(f, n, n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (c[i] != 0) sum = sum + basis[i].scaled(c[i]);
        }
        return sum;
      },
      [&](const Matrix& m) { return rank(m) == n; });
}

std::optional<QuadSpace> first_nondegenerate_quadratic(const std::vector<QuadSpace>& basis) {
  if (basis.empty()) return std::nullopt;
  const FieldPrime& f = basis.front().field();
  const std::size_t n = basis.front().dim();
  return first_lex_combination(
      f.characteristic(), basis.size(),
      [&](const std::vector<std::uint8_t>& c) {
        Matrix quad(f, n, n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (c[i] != 0) quad = quad + basis[i].quad().scaled(c[i]);
        }
        return QuadSpace(std::move(quad));
      },
      [&](const QuadSpace& s) { return s.is_nondegenerate(); });
}

}  // namespace regulib
