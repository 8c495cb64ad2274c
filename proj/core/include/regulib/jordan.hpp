// SPDX-License-Identifier: MIT
//
// Jordan-type calculus for unipotent matrices in characteristic p: block
// extraction through rank sequences, the p-th power closed form, tensor /
// exterior-square / symmetric-square decompositions, and element orders.
//
// Everything operates on immutable values; all functions are pure and safe
// to parallelize across (partition, prime) grids.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "regulib/exactla.hpp"

namespace regulib {

/// A partition of a dimension into weakly decreasing Jordan block sizes.
class JordanType {
 public:
  /// The empty type (dimension 0).
  JordanType() = default;

  /// Takes block sizes in any order and stores them sorted descending.
  /// Throws std::invalid_argument when a block size is zero.
  explicit JordanType(std::vector<unsigned> blocks);

  [[nodiscard]] const std::vector<unsigned>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] unsigned dimension() const noexcept;
  /// Largest block, or 0 for the empty type.
  [[nodiscard]] unsigned max_block() const noexcept;

  /// Renders as "7+4+1" (descending); the empty type renders as "0".
  [[nodiscard]] std::string to_string() const;

  /// Parses the "+"-separated format; blocks may appear in any order.
  /// "0" parses to the empty type.  Throws std::invalid_argument on
  /// malformed text.
  [[nodiscard]] static JordanType parse(const std::string& text);

  friend bool operator==(const JordanType&, const JordanType&) = default;

 private:
  std::vector<unsigned> blocks_;
};

/// True when (u - I)^dim = 0, i.e. u is unipotent.
[[nodiscard]] bool is_unipotent(const Matrix& u);

/// Jordan type of a unipotent matrix, recovered from the rank sequence
/// r_k = rank((u - I)^k) via (#blocks of size >= k) = r_{k-1} - r_k.
/// Throws std::domain_error when u is not unipotent.
[[nodiscard]] JordanType jordan_type(const Matrix& u);

/// Jordan type of u^p given the type of u, by the closed form: a block of
/// size n = a*p + b (0 <= b < p) contributes b blocks of size a+1 and p-b
/// blocks of size a, dropping size-0 blocks.  Throws std::invalid_argument
/// unless p is prime.
[[nodiscard]] JordanType jordan_power(const JordanType& t, unsigned p);

/// Jordan type of J_s (tensor) J_t over GF(p), computed by the Kronecker
/// oracle blockwise: no closed formula, each single-block pair is realized
/// and decomposed by rank sequences.  Throws std::invalid_argument unless
/// p is a prime in [2, 251].
[[nodiscard]] JordanType jordan_tensor(const JordanType& s, const JordanType& t, unsigned p);

/// Jordan type of the induced action on the exterior square, on the basis
/// e_i ^ e_j (i < j, lexicographic).  Throws std::domain_error when u is
/// not unipotent and std::invalid_argument when dim < 2.
[[nodiscard]] JordanType jordan_wedge2(const Matrix& u);

/// Jordan type of the induced action on the symmetric square, on the
/// monomial basis e_i e_j (i <= j, lexicographic).  Same errors as
/// jordan_wedge2.
[[nodiscard]] JordanType jordan_sym2(const Matrix& u);

/// Order of any unipotent realization: p^ceil(log_p(max block)).
/// Throws std::invalid_argument unless p is prime.
[[nodiscard]] unsigned long long unipotent_order(const JordanType& t, unsigned p);

/// The matrix on the exterior square induced by an arbitrary square matrix.
[[nodiscard]] Matrix wedge_square_matrix(const Matrix& g);

/// Unipotent single Jordan block J_n (ones on diagonal and superdiagonal).
[[nodiscard]] Matrix jordan_block(const FieldPrime& f, std::size_t n);

/// Block-diagonal unipotent realization of a Jordan type.
[[nodiscard]] Matrix jordan_matrix(const FieldPrime& f, const JordanType& t);

/// All partitions of n in descending lexicographic order, [n] first.
/// all_partitions(0) is {empty type}.
[[nodiscard]] std::vector<JordanType> all_partitions(unsigned n);

}  // namespace regulib
