// SPDX-License-Identifier: MIT
//
// Desk-scale catalogue of the simple modules on which a regular (possibly
// outer) unipotent element acts with a maximal Jordan block: symmetric
// powers of the 2-dimensional module, natural modules of the classical
// isometry groups, the 7/6-dimensional modules of the rank-two
// exceptional group, the outer-extended conjugation action on trace-zero
// 3x3 matrices, and two tensor constructions whose unipotent permutes the
// tensor factors.  Every constructor re-validates its row's Jordan-type
// and order claims before returning, so a successfully built RepDatum is
// a certificate.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "regulib/exactla.hpp"

namespace regulib {

/// Natural-module families: special linear (A), odd orthogonal with p odd
/// (B), symplectic (C), and the extended even orthogonal group over GF(2)
/// whose distinguished element lies in the Dickson-1 coset (D2).
enum class RepFamily { A, B, C, D2 };

/// Row-tag prefix: "Al", "Bl", "Cl", "Dl.2".
[[nodiscard]] std::string to_string(RepFamily family);

/// One catalogue row.  `generators` generate (a subgroup of) the image of
/// the connected group acting on GF(p)^dim; `u` is the image of the
/// regular or outer unipotent element; `order_bound` is the row's integer
/// bound on matrix_order(u).  The bound's strictness is row-specific and
/// is validated at construction: symmetric-power rows have order exactly
/// p, natural rows satisfy a strict inequality, the 7-dimensional
/// exceptional row is bounded by p^2 inclusively, and the remaining rows
/// attain their bound exactly.
struct RepDatum {
  std::string row_tag;             ///< e.g. "A1:sym:2:3"
  unsigned p;                      ///< field characteristic
  std::size_t dim;                 ///< module dimension
  std::vector<Matrix> generators;  ///< image of the connected group
  Matrix u;                        ///< regular/outer unipotent element
  unsigned long long order_bound;  ///< row bound on matrix_order(u)
};

/// Action of the two standard unipotent generators of SL_2(GF(p)) on the
/// degree-m binary forms (dimension m + 1); u is the image of the upper
/// unipotent, with Jordan type [m+1] and order exactly p.  Requires
/// 1 <= m < p; row tag "A1:sym:m:p".
[[nodiscard]] RepDatum sym_power_rep(unsigned m, unsigned p);

/// Natural module of a classical family with its regular (family D2:
/// outer Dickson-1) unipotent element:
///   A:  dim l+1, l >= 1, type [l+1], order < p(l+1);
///   B:  dim 2l+1, l >= 2, p odd, type [2l+1], order < p(2l+1);
///   C:  dim 2l, l >= 2, type [2l], order < 2pl;
///   D2: dim 2l, l >= 3, p = 2, type [2l], order < 4l.
/// Generators: elementary transvections (A) or the isometry generating
/// sets of the solved invariant form (B, C, D2).  Row tag
/// "<prefix>:nat:l:p".
[[nodiscard]] RepDatum natural_rep(RepFamily family, unsigned l, unsigned p);

/// The 7-dimensional (p > 2) or 6-dimensional (p = 2) module of the
/// rank-two exceptional group, built from frozen integer matrices of the
/// twelve exponentiated root elements (see core/src/g2data.cpp) reduced
/// mod p; for p = 2 the action descends to the 6-dimensional symplectic
/// quotient by the fixed radical line.  u is the product of the two
/// simple-root elements (short first), of type [7] with order <= p^2, or
/// type [6] with order exactly 8 when p = 2.  The constructor validates
/// form invariance, unipotence, non-commuting opposite root pairs, the
/// type/order claims, and absolute irreducibility; any failure throws
/// std::runtime_error.  Row tag "G2:7:p" or "G2:6:2".
[[nodiscard]] RepDatum g2_rep(unsigned p);

/// SL_3(GF(2)) acting by conjugation on trace-zero 3x3 matrices (dim 8),
/// extended by the outer element M -> (g M g^{-1})^T.  The twisting g is
/// found by a deterministic exhaustive search (unipotent candidates in
/// counter order first, then the rest of SL_3(GF(2))) so that u is
/// unipotent of type [8]; order exactly 8.  Requires p = 2; row tag
/// "A2.2:adj:2".
[[nodiscard]] RepDatum a2_adjoint_outer(unsigned p);

/// V = (GF(p)^2)^{tensor p} for p in {2, 3}; u = (cyclic factor
/// permutation) o (J_2 on the first factor), of a single Jordan type
/// [2^p]; u^p acts as J_2 on every factor simultaneously.  Generators:
/// the two standard SL_2 unipotents embedded in each factor.  Row tag
/// "L2.7(2):p".
[[nodiscard]] RepDatum tensor_wreath(unsigned p);

/// V = GF(2)^3 tensor GF(2)^3; u(v tensor w) = w tensor (J_3 v), of type
/// [8, 1] and order 8, with u^2 = J_3 tensor J_3 of type [4, 4, 1].
/// Generators: elementary transvections of each SL_3 factor.  Row tag
/// "L2.7(3)".
[[nodiscard]] RepDatum tensor_swap9();

}  // namespace regulib
