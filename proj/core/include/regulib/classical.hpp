// SPDX-License-Identifier: MIT
//
// Regular unipotent representatives in the classical groups: single Jordan
// blocks in SL_n and Sp_2l, maximal two-block isometries of quadratic
// spaces, the Dickson-1 coset of even orthogonal groups in characteristic
// 2, and the outer coset of the stabiliser of a pair of complementary
// totally singular subspaces.  Also: explicit generating sets for the
// isometry groups of solved invariant forms.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"
#include "regulib/jordan.hpp"

namespace regulib {

/// Which classical group (or outer coset) a representative lives in.
enum class GroupTag {
  SL,          ///< special linear, no invariant form
  Sp,          ///< symplectic, invariant alternating form
  SO_odd,      ///< odd-dimensional orthogonal, p odd
  SO_even,     ///< even-dimensional orthogonal (Dickson 0 in char 2)
  GO_outer,    ///< Dickson-1 coset of an even orthogonal group, char 2
  GLl2_outer,  ///< outer coset of the stabiliser of a pair of complementary
               ///< totally singular subspaces in an even orthogonal group
};

std::string to_string(GroupTag tag);

/// A unipotent element of maximal Jordan-block profile in its group,
/// together with the form it preserves (when one exists) and the block
/// profile it is guaranteed to have.
struct RegularRep {
  GroupTag group_tag;
  unsigned l_or_n;  ///< n for SL/Sp/SO (dimension), l for GLl2_outer
  unsigned p;
  Matrix u;
  std::optional<std::variant<QuadSpace, SympSpace>> space;
  JordanType expected_type;
};

/// Single Jordan block J_n in SL_n(GF(p)).  Requires n >= 2.
RegularRep regular_in_sl(unsigned n, unsigned p);

/// Single Jordan block J_n preserving a nondegenerate alternating form,
/// n even >= 2.  The form is the first nondegenerate member of the
/// solved space of J_n-invariant alternating forms; failure to find one
/// is reported as std::runtime_error.
RegularRep regular_in_sp(unsigned n, unsigned p);

/// Maximal-profile unipotent isometry of a nondegenerate quadratic space
/// of dimension n:
///   - n odd >= 3, p odd: J_n with an invariant symmetric form
///     (block profile [n]);
///   - n even >= 6, p odd: J_{n-1} perp J_1 (profile [n-1, 1]);
///   - n even >= 6, p = 2: J_{n-2} perp J_2, each block preserving a
///     solved invariant quadratic form (profile [n-2, 2], Dickson 0).
/// Odd n with p = 2 is rejected (std::invalid_argument): that case is
/// served through the symplectic group of the underlying alternating form.
RegularRep regular_in_so(unsigned n, unsigned p);

/// Single Jordan block J_n (n = 2l even, l >= 2) as a Dickson-1 isometry
/// of a solved invariant nondegenerate quadratic form over GF(2).
RegularRep go_outer_regular(unsigned n, unsigned p);

/// Element of the outer coset of the stabiliser, inside an even
/// orthogonal group over GF(2), of a pair of complementary totally
/// singular subspaces W, W*.  On the hyperbolic space
/// Q(sum a_i e_i + sum b_i f_i) = sum a_i b_i the element is
/// u = tau . diag(g, g^{-T}) with tau the swap e_i <-> f_i, and g found
/// by deterministic search (unipotent upper-triangular enumeration, then
/// seeded pseudorandom sampling; cap 10^6 candidates) so that u^2
/// restricted to W has block profile [l] (l odd) or [l-1, 1] (l even).
/// The resulting profile of u is [2l] (l odd) or [2l-2, 2] (l even).
/// Requires l >= 3, p = 2.
RegularRep gl_stab_outer(unsigned l, unsigned p);

/// Generating set for the kernel of the Dickson map on the isometry
/// group of a nondegenerate quadratic space: all Siegel/Eichler maps
///   E_{u,v}: x -> x + B(x,v) u - B(x,u) v - Q(v) B(x,u) u
/// with u running over the vectors of an extracted hyperbolic
/// decomposition and v over a basis of the perp of u.  Every returned
/// matrix is an isometry fixing the form; in even dimension over GF(2)
/// each has Dickson invariant 0.
std::vector<Matrix> isometry_generators(const QuadSpace& space);

/// Generating set for the symplectic group of a nondegenerate
/// alternating space: transvections in the directions of an extracted
/// hyperbolic basis plus the rank-2 pair-mixing maps
///   x -> x + B(x,a) b + B(x,b) a
/// for adjacent hyperbolic pairs.  These contain representatives of
/// every long and short root direction relative to the extracted basis,
/// hence generate the full symplectic group of the space.
std::vector<Matrix> isometry_generators(const SympSpace& space);

}  // namespace regulib
