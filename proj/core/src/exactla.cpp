// SPDX-License-Identifier: MIT

#include "regulib/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace regulib {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldPrime
// ---------------------------------------------------------------------------

FieldPrime::FieldPrime(unsigned p) : p_(p) {
  if (p < 2 || p > 251 || !is_prime(p)) {
    throw std::invalid_argument("FieldPrime: modulus must be a prime in [2, 251]");
  }
}

std::uint8_t FieldPrime::add(std::uint8_t a, std::uint8_t b) const noexcept {
  unsigned s = unsigned{a} + unsigned{b};
  if (s >= p_) s -= p_;
  return static_cast<std::uint8_t>(s);
}

std::uint8_t FieldPrime::sub(std::uint8_t a, std::uint8_t b) const noexcept {
  unsigned s = unsigned{a} + p_ - unsigned{b};
  if (s >= p_) s -= p_;
  return static_cast<std::uint8_t>(s);
}

std::uint8_t FieldPrime::neg(std::uint8_t a) const noexcept {
  return a == 0 ? std::uint8_t{0} : static_cast<std::uint8_t>(p_ - a);
}

std::uint8_t FieldPrime::mul(std::uint8_t a, std::uint8_t b) const noexcept {
  return static_cast<std::uint8_t>((unsigned{a} * unsigned{b}) % p_);
}

std::uint8_t FieldPrime::pow(std::uint8_t a, unsigned long long e) const noexcept {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint8_t FieldPrime::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("FieldPrime::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint8_t FieldPrime::reduce(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint8_t>(r);
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

Matrix::Matrix(FieldPrime field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPrime field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPrime field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("Matrix::from_rows: uneven row lengths");
    }
    std::size_t j = 0;
    for (long long v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
  if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) {
    throw std::invalid_argument("Matrix::set_block: block does not fit");
  }
  for (std::size_t i = 0; i < m.rows_; ++i) {
    std::copy_n(m.entries_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_), m.cols_,
                entries_.begin() + static_cast<std::ptrdiff_t>((i0 + i) * cols_ + j0));
  }
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_) {
    throw std::invalid_argument("Matrix::block: range out of bounds");
  }
  Matrix out(field_, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>((i0 + i) * cols_ + j0), c,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(i * c));
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    }
  }
  return out;
}

Matrix Matrix::pow(unsigned long long e) const {
  if (!is_square()) throw std::invalid_argument("Matrix::pow: matrix must be square");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    if (e >>= 1; e > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t v) { return v == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (entries_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix Matrix::scaled(std::uint8_t c) const {
  Matrix out = *this;
  for (auto& v : out.entries_) v = field_.mul(v, c);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("Matrix operator+: shape or field mismatch");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] = a.field_.add(a.entries_[k], b.entries_[k]);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("Matrix operator-: shape or field mismatch");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] = a.field_.sub(a.entries_[k], b.entries_[k]);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("Matrix operator*: field mismatch");
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix operator*: shape mismatch");
  const unsigned p = a.field_.characteristic();
  Matrix out(a.field_, a.rows_, b.cols_);
  // Accumulate in 64-bit with a single reduction per output entry: products
  // are < 251^2 and the inner dimension stays desk-sized, so no overflow.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc += std::uint64_t{a.entries_[i * a.cols_ + k]} *
               std::uint64_t{b.entries_[k * b.cols_ + j]};
      }
      out.entries_[i * out.cols_ + j] = static_cast<std::uint8_t>(acc % p);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field() || a.cols() != b.cols()) {
    throw std::invalid_argument("vstack: field or column-count mismatch");
  }
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

// ---------------------------------------------------------------------------
// Echelon-form machinery
// ---------------------------------------------------------------------------

namespace {

// In-place reduced row echelon form over GF(p) on a raw row-major buffer.
// Deterministic pivoting: scan columns left to right, take the first row at
// or below the current one with a nonzero entry.  Returns the pivot columns.
// Pivots are only sought in the first pivot_limit columns (row operations
// still span the full width), which is what augmented-system solving needs.
std::vector<std::size_t> rref_in_place(const FieldPrime& f, std::vector<std::uint8_t>& e,
                                       std::size_t rows, std::size_t cols,
                                       std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < rows && e[pivot_row * cols + c] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      std::swap_ranges(e.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols),
                       e.begin() + static_cast<std::ptrdiff_t>((pivot_row + 1) * cols),
                       e.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const std::uint8_t inv = f.inv(e[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      e[r * cols + j] = f.mul(e[r * cols + j], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint8_t factor = e[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        e[i * cols + j] = f.sub(e[i * cols + j], f.mul(factor, e[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::vector<std::uint8_t> buf = m.data();
  return rref_in_place(m.field(), buf, m.rows(), m.cols(), m.cols()).size();
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<std::uint8_t> buf = m.data();
  const std::size_t cols = m.cols();
  const std::vector<std::size_t> pivots =
      rref_in_place(m.field(), buf, m.rows(), cols, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix basis(m.field(), cols - pivots.size(), cols);
  std::size_t out_row = 0;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.set(out_row, free_col, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      // Row k of the RREF reads x_{pivot[k]} + sum coeff * x_free = 0.
      basis.set(out_row, pivots[k],
                -static_cast<long long>(buf[k * cols + free_col]));
    }
    ++out_row;
  }
  return basis;
}

Matrix row_echelon_basis(const Matrix& m) {
  std::vector<std::uint8_t> buf = m.data();
  const std::size_t cols = m.cols();
  const std::vector<std::size_t> pivots =
      rref_in_place(m.field(), buf, m.rows(), cols, cols);
  Matrix out(m.field(), pivots.size(), cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out.set(i, j, buf[i * cols + j]);
    }
  }
  return out;
}

std::optional<Matrix> solve_linear(const Matrix& coeffs, const Matrix& rhs) {
  if (coeffs.field() != rhs.field() || coeffs.rows() != rhs.rows()) {
    throw std::invalid_argument("solve_linear: shape or field mismatch");
  }
  const std::size_t n = coeffs.cols();
  const std::size_t k = rhs.cols();
  const std::size_t aug_cols = n + k;

  // Row-reduce the augmented matrix [coeffs | rhs].
  std::vector<std::uint8_t> buf(coeffs.rows() * aug_cols, 0);
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[i * aug_cols + j] = coeffs.at(i, j);
    for (std::size_t j = 0; j < k; ++j) buf[i * aug_cols + n + j] = rhs.at(i, j);
  }
  // Pivots restricted to the coefficient block; a leftover nonzero row on
  // the right-hand side then signals inconsistency.
  const std::vector<std::size_t> pivots =
      rref_in_place(coeffs.field(), buf, coeffs.rows(), aug_cols, n);

  // Inconsistent iff some row is zero on the left block but not on the right.
  for (std::size_t i = pivots.size(); i < coeffs.rows(); ++i) {
    for (std::size_t j = n; j < aug_cols; ++j) {
      if (buf[i * aug_cols + j] != 0) return std::nullopt;
    }
  }

  // Free variables are zero, so each pivot variable reads straight off its row.
  Matrix x(coeffs.field(), n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      x.set(pivots[r], j, buf[r * aug_cols + n + j]);
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::optional<Matrix> x = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  if (!x || !(m * *x).is_identity()) return std::nullopt;
  return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("kronecker: field mismatch");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint8_t aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t kk = 0; kk < b.rows(); ++kk) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + kk, j * b.cols() + l,
                  a.field().mul(aij, b.at(kk, l)));
        }
      }
    }
  }
  return out;
}

std::optional<unsigned long long> matrix_order(const Matrix& m, unsigned long long cap) {
  if (!m.is_square() || rank(m) != m.rows()) {
    throw std::domain_error("matrix_order: matrix must be invertible");
  }
  Matrix acc = m;
  for (unsigned long long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << unsigned{m.at(i, j)};
    }
    os << ']';
    if (i + 1 < m.rows()) os << '\n';
  }
  return os.str();
}

}  // namespace regulib
