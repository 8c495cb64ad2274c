// SPDX-License-Identifier: MIT
//
// Exact dense linear algebra over prime fields GF(p) for small primes,
// 2 <= p <= 251.  Entries are single-byte residues; accumulation uses wide
// integers with delayed reduction, and inverses use Fermat exponentiation.
//
// Every type here is immutable after construction and every operation is a
// pure function, so all of it is safe for concurrent use.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace regulib {

/// Returns true when n is a prime number.
[[nodiscard]] bool is_prime(unsigned n) noexcept;

/// The prime field GF(p), 2 <= p <= 251.
///
/// Field elements are residues in [0, p) stored as bytes.  The class only
/// carries the modulus; element arithmetic goes through the member helpers
/// so reduction policy lives in one place.
class FieldPrime {
 public:
  /// Throws std::invalid_argument unless p is a prime in [2, 251].
  explicit FieldPrime(unsigned p);

  [[nodiscard]] unsigned characteristic() const noexcept { return p_; }

  [[nodiscard]] std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept;
  [[nodiscard]] std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept;
  [[nodiscard]] std::uint8_t neg(std::uint8_t a) const noexcept;
  [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept;

  /// a^e by square-and-multiply (0^0 = 1).
  [[nodiscard]] std::uint8_t pow(std::uint8_t a, unsigned long long e) const noexcept;

  /// Multiplicative inverse via Fermat: a^(p-2).  Throws std::domain_error
  /// when a == 0.
  [[nodiscard]] std::uint8_t inv(std::uint8_t a) const;

  /// Reduces an arbitrary signed integer into [0, p).
  [[nodiscard]] std::uint8_t reduce(long long v) const noexcept;

  friend bool operator==(const FieldPrime&, const FieldPrime&) = default;

 private:
  unsigned p_;
};

/// Dense row-major matrix over GF(p).
///
/// Shapes with zero rows or columns are allowed (they arise as empty kernel
/// bases).  All entries are kept reduced into [0, p).
class Matrix {
 public:
  /// Zero matrix of the given shape.
  Matrix(FieldPrime field, std::size_t rows, std::size_t cols);

  [[nodiscard]] static Matrix identity(FieldPrime field, std::size_t n);

  /// Builds a matrix from integer rows; entries are reduced mod p.
  /// Throws std::invalid_argument when the rows have uneven lengths.
  [[nodiscard]] static Matrix from_rows(
      FieldPrime field,
      std::initializer_list<std::initializer_list<long long>> rows);

  [[nodiscard]] const FieldPrime& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] std::uint8_t at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  /// Stores v (reduced mod p) at position (i, j).
  void set(std::size_t i, std::size_t j, long long v) {
    entries_[i * cols_ + j] = field_.reduce(v);
  }

  /// Row-major entries, reduced into [0, p).
  [[nodiscard]] const std::vector<std::uint8_t>& data() const noexcept { return entries_; }

  /// Copies m into this matrix with its top-left corner at (i0, j0).
  /// Throws std::invalid_argument when m does not fit.
  void set_block(std::size_t i0, std::size_t j0, const Matrix& m);

  /// The r x c submatrix with top-left corner at (i0, j0).
  [[nodiscard]] Matrix block(std::size_t i0, std::size_t j0, std::size_t r,
                             std::size_t c) const;

  [[nodiscard]] Matrix transpose() const;

  /// Matrix power by square-and-multiply; requires a square matrix.
  [[nodiscard]] Matrix pow(unsigned long long e) const;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  /// Scalar multiple c * m.
  [[nodiscard]] Matrix scaled(std::uint8_t c) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  FieldPrime field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

/// Block-diagonal sum diag(a, b).  Throws std::invalid_argument on field
/// mismatch.
[[nodiscard]] Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Vertical stack [a; b].  Throws std::invalid_argument on column-count or
/// field mismatch.
[[nodiscard]] Matrix vstack(const Matrix& a, const Matrix& b);

/// Row rank over GF(p).
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}; the rows of the result are the
/// reduced-echelon kernel basis (one vector per free column, in ascending
/// column order), so the output is deterministic.
[[nodiscard]] Matrix kernel_basis(const Matrix& m);

/// Canonical basis of the row space: reduced row echelon form with zero rows
/// dropped.  Two matrices span the same row space iff their outputs match.
[[nodiscard]] Matrix row_echelon_basis(const Matrix& m);

/// Solves coeffs * x = rhs.  rhs may have several columns; each is solved
/// against the same coefficient matrix.  Returns the solution with all free
/// variables set to zero, or std::nullopt when the system is inconsistent.
/// Throws std::invalid_argument when the shapes are incompatible.
[[nodiscard]] std::optional<Matrix> solve_linear(const Matrix& coeffs, const Matrix& rhs);

/// Inverse of a square matrix, or std::nullopt when singular.
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

/// Kronecker product with index order (i*b.rows + k, j*b.cols + l).
/// Throws std::invalid_argument on field mismatch.
[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

/// Least k >= 1 with m^k = I when k <= cap, std::nullopt otherwise.
/// Throws std::domain_error when m is singular (or not square).
[[nodiscard]] std::optional<unsigned long long> matrix_order(const Matrix& m,
                                                             unsigned long long cap);

/// Renders a matrix as text rows like "[1 0 1]" joined by newlines (debug aid).
[[nodiscard]] std::string to_string(const Matrix& m);

}  // namespace regulib
