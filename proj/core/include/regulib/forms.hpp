// SPDX-License-Identifier: MIT
//
// Bilinear and quadratic spaces over GF(p): isometry-group membership,
// totally singular/isotropic subspaces, the Dickson invariant, and linear
// solvers for forms invariant under a given matrix.
//
// Quadratic spaces are characteristic-agnostic: the defining data is the
// upper-triangular coefficient matrix of Q, and the Gram matrix of the
// polarized bilinear form B(x, y) = Q(x+y) - Q(x) - Q(y) is derived from it.
// In characteristic 2 the Gram matrix is automatically alternating.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "regulib/exactla.hpp"

namespace regulib {

/// A quadratic space (V, Q) with Q(x) = sum_{i<=j} q_ij x_i x_j.
class QuadSpace {
 public:
  /// Builds the space from the upper-triangular coefficient matrix of Q.
  /// Throws std::invalid_argument when quad is not square upper-triangular.
  explicit QuadSpace(Matrix quad);

  /// Hyperbolic space of dimension 2l with basis e_1..e_l, f_1..f_l and
  /// Q(sum a_i e_i + sum b_i f_i) = sum a_i b_i.
  [[nodiscard]] static QuadSpace hyperbolic(const FieldPrime& f, std::size_t l);

  /// Odd-dimensional space of dimension 2l+1: hyperbolic 2l-space plus an
  /// anisotropic point, Q = sum a_i b_i + c^2 on basis e_1..e_l, f_1..f_l, z.
  [[nodiscard]] static QuadSpace odd_orthogonal(const FieldPrime& f, std::size_t l);

  /// Reads a quadratic form off a symmetric Gram matrix in odd
  /// characteristic: q_ii = gram_ii / 2, q_ij = gram_ij for i < j.
  /// Throws std::domain_error in characteristic 2 and
  /// std::invalid_argument when gram is not symmetric.
  [[nodiscard]] static QuadSpace from_symmetric_gram(const Matrix& gram);

  [[nodiscard]] const FieldPrime& field() const noexcept { return quad_.field(); }
  [[nodiscard]] std::size_t dim() const noexcept { return quad_.rows(); }
  /// Upper-triangular coefficient matrix of Q.
  [[nodiscard]] const Matrix& quad() const noexcept { return quad_; }
  /// Gram matrix of the polarized bilinear form.
  [[nodiscard]] const Matrix& gram() const noexcept { return gram_; }

  /// Q(v) for a coordinate vector (row or column of length dim).
  [[nodiscard]] std::uint8_t q(const Matrix& v) const;
  /// B(v, w) for coordinate vectors.
  [[nodiscard]] std::uint8_t b(const Matrix& v, const Matrix& w) const;

  /// Nondegeneracy of (V, Q): the Gram radical is trivial, except that in
  /// characteristic 2 a one-dimensional radical with Q nonzero on it is
  /// allowed (the odd-dimensional case).
  [[nodiscard]] bool is_nondegenerate() const;

 private:
  Matrix quad_;
  Matrix gram_;
};

/// A symplectic space: a nondegenerate alternating Gram matrix.
class SympSpace {
 public:
  /// Throws std::invalid_argument unless gram is square, alternating
  /// (gram^T = -gram with zero diagonal) and nondegenerate of even dim.
  explicit SympSpace(Matrix gram);

  /// Standard symplectic space of dimension 2l: B(e_i, f_i) = 1 on the
  /// basis e_1..e_l, f_1..f_l.
  [[nodiscard]] static SympSpace standard(const FieldPrime& f, std::size_t l);

  [[nodiscard]] const FieldPrime& field() const noexcept { return gram_.field(); }
  [[nodiscard]] std::size_t dim() const noexcept { return gram_.rows(); }
  [[nodiscard]] const Matrix& gram() const noexcept { return gram_; }

  /// B(v, w) for coordinate vectors.
  [[nodiscard]] std::uint8_t b(const Matrix& v, const Matrix& w) const;

 private:
  Matrix gram_;
};

/// A subspace stored as a canonical reduced-echelon row basis.
class SubspaceBasis {
 public:
  /// The subspace spanned by the rows of m (dependent rows are merged).
  explicit SubspaceBasis(const Matrix& m);

  /// The zero subspace of an ambient dimension.
  [[nodiscard]] static SubspaceBasis zero(const FieldPrime& f, std::size_t ambient_dim);

  [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  /// Rows are the canonical echelon basis.
  [[nodiscard]] const Matrix& matrix() const noexcept { return basis_; }

  /// Membership test for a row vector.
  [[nodiscard]] bool contains(const Matrix& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  Matrix basis_;
};

/// g preserves the quadratic form: g^T gram g = gram and Q(g e_i) = Q(e_i)
/// for all i (which together give Q(g v) = Q(v) for every v).
/// Throws std::invalid_argument on shape mismatch.
[[nodiscard]] bool is_isometry(const Matrix& g, const QuadSpace& space);

/// g preserves the alternating form: g^T gram g = gram.
/// Throws std::invalid_argument on shape mismatch.
[[nodiscard]] bool is_isometry(const Matrix& g, const SympSpace& space);

/// Q vanishes on all basis vectors and B on all pairs.
[[nodiscard]] bool is_totally_singular(const SubspaceBasis& s, const QuadSpace& space);

/// B vanishes on all pairs of basis vectors.
[[nodiscard]] bool is_totally_isotropic(const SubspaceBasis& s, const SympSpace& space);

/// Orthogonal complement {x : B(w, x) = 0 for all w in s}.
[[nodiscard]] SubspaceBasis perp(const SubspaceBasis& s, const QuadSpace& space);
[[nodiscard]] SubspaceBasis perp(const SubspaceBasis& s, const SympSpace& space);

/// Dickson invariant rank(g - I) mod 2, defined in characteristic 2 for
/// isometries of (V, Q).  Throws std::domain_error when the characteristic
/// is not 2 or g is not an isometry.
[[nodiscard]] unsigned dickson(const Matrix& g, const QuadSpace& space);

enum class BilinearKind { alternating, symmetric };

/// Basis of the space {B : u^T B u = B} with B alternating resp. symmetric;
/// deterministic (reduced-echelon solution basis).  Throws std::domain_error
/// when u is singular.
[[nodiscard]] std::vector<Matrix> invariant_bilinear_forms(const Matrix& u, BilinearKind kind);

/// Characteristic 2 only: basis of the space of quadratic forms Q with
/// Q(u e_i) = Q(e_i) for all i and u^T gram(Q) u = gram(Q), returned as
/// QuadSpace values.  Throws std::domain_error for p != 2 or singular u.
[[nodiscard]] std::vector<QuadSpace> invariant_quadratic_forms(const Matrix& u);

/// First nondegenerate member of span{basis} \ {0}, scanning coefficient
/// vectors in lexicographic order (earliest basis element most significant).
/// Applies the QuadSpace nondegeneracy notion to gram matrices via rank.
[[nodiscard]] std::optional<Matrix> first_nondegenerate_gram(const std::vector<Matrix>& basis);

/// Same scan over quadratic forms, using QuadSpace::is_nondegenerate.
[[nodiscard]] std::optional<QuadSpace> first_nondegenerate_quadratic(
    const std::vector<QuadSpace>& basis);

}  // namespace regulib
