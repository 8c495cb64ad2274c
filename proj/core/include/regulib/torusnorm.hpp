// SPDX-License-Identifier: MIT
//
// Torus-normalizer calculus: symbolic diagonalizable subgroups given by
// integer weights, normalization/centralization tests, the wreath-style
// constructions of normalizer subgroups containing regular unipotent
// elements, weight-orbit classification, parabolic-containment witnesses,
// and the cyclotomic lower bound for the dimension of a torus normalized
// by an element of prime-power order.
//
// Tori are symbolic throughout: a torus is the datum of integer weight
// vectors attached to an eigenbasis, never a finite set of matrices.  Over
// a prime field the rational points of a torus can be trivial (GF(2) tori
// always are), so normalization, centralization and invariance of
// subspaces are decided by weight combinatorics, which matches the
// algebraic-group semantics over the algebraic closure.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"

namespace regulib {

/// A diagonalizable subgroup of GL(V), given symbolically: an invertible
/// basis_change whose ROWS form the eigenbasis, and one integer weight
/// vector in Z^rank per row.  Rows with equal weight vectors span the
/// weight spaces.
class DiagTorus {
 public:
  /// Throws std::invalid_argument when rank is 0, the weight list is empty
  /// or ragged, or basis_change is not square of matching size or not
  /// invertible.
  DiagTorus(unsigned rank, std::vector<std::vector<long long>> weights,
            Matrix basis_change);

  /// Same with basis_change = identity (the coordinate basis is the
  /// eigenbasis).
  DiagTorus(unsigned rank, std::vector<std::vector<long long>> weights,
            const FieldPrime& field);

  [[nodiscard]] unsigned rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t dim() const noexcept { return weights_.size(); }
  [[nodiscard]] const FieldPrime& field() const noexcept { return basis_change_.field(); }
  [[nodiscard]] const std::vector<std::vector<long long>>& weights() const noexcept {
    return weights_;
  }
  [[nodiscard]] const Matrix& basis_change() const noexcept { return basis_change_; }

 private:
  unsigned rank_;
  std::vector<std::vector<long long>> weights_;
  Matrix basis_change_;
};

/// How a containment certificate certifies containment in a proper
/// parabolic subgroup:
///  - invariant_subspace: an invariant proper nonzero subspace (stabilizers
///    of such subspaces are the proper parabolics of a determinant-one
///    ambient group);
///  - invariant_totally_singular_subspace: an invariant nonzero totally
///    singular (resp. isotropic) subspace, whose stabilizer is a proper
///    parabolic of the orthogonal (resp. symplectic) ambient group;
///  - centralized_unipotent: a nontrivial unipotent element centralizing
///    the whole group, which places the group inside the centralizer and
///    hence (Borel–Tits) inside a proper parabolic.
enum class WitnessKind {
  invariant_subspace,
  invariant_totally_singular_subspace,
  centralized_unipotent,
};

[[nodiscard]] std::string to_string(WitnessKind kind);

/// A parabolic-containment certificate: a subspace basis for the two
/// invariant-subspace kinds, a matrix for the centralized-unipotent kind.
struct ContainmentWitness {
  WitnessKind kind;
  std::variant<SubspaceBasis, Matrix> data;
};

/// A torus together with a normalizing element inside a fixed ambient
/// classical group.  ambient_form empty means the determinant-one ambient
/// SL(V); a QuadSpace means the orthogonal isometry group of that form; a
/// SympSpace the symplectic one.  construction/params record which builder
/// produced the datum.
struct TorusNormalizerDatum {
  DiagTorus torus;
  Matrix u;
  std::optional<std::variant<QuadSpace, SympSpace>> ambient_form;
  std::string construction;
  std::vector<unsigned> params;
};

/// Classification report for classify_torus_case.  case_tag 1/2/3 is the
/// orthogonal trichotomy (see classify_torus_case); case_tag 0 covers the
/// two non-trichotomy reports (equal-dimension SL report and the paired
/// totally-singular decomposition report).
struct TorusCaseReport {
  unsigned case_tag = 0;
  /// Common dimension of all weight spaces when they share one (the "d" of
  /// the equal-dimension report); 0 otherwise.
  std::size_t common_weight_dim = 0;
  /// Sizes of the <u>-orbits on weight spaces, in order of each orbit's
  /// smallest weight-space index.
  std::vector<std::size_t> orbit_sizes;
  /// Dimension of the zero-weight space (0 when there is none).
  std::size_t zero_weight_dim = 0;
};

/// Weight spaces of the torus: basis indices grouped by identical weight
/// vector (in first-occurrence order), each group mapped through
/// basis_change.  The dimensions sum to dim().
[[nodiscard]] std::vector<std::pair<std::vector<long long>, SubspaceBasis>> weight_spaces(
    const DiagTorus& torus);

/// Does u normalize the torus?  Present iff u maps every weight space
/// bijectively onto a weight space AND the induced map on weight vectors
/// extends to an integer-invertible transformation of the weight lattice.
/// The extension condition is decided by an exact integer rank comparison
/// (the induced map must be Q-consistent on the weight rows; since it then
/// maps the generating multiset of the lattice onto itself bijectively, it
/// is automatically a lattice automorphism of determinant ±1).  Returns
/// the induced permutation: result[k] = index of the image of space k in
/// weight_spaces order.
[[nodiscard]] std::optional<std::vector<std::size_t>> normalizes_torus(const Matrix& u,
                                                                       const DiagTorus& torus);

/// Does g centralize the torus?  True iff g stabilizes every weight space
/// setwise — equivalent to commuting with every point of the torus over
/// the algebraic closure, since distinct integer weights separate there.
[[nodiscard]] bool centralizes_torus(const Matrix& g, const DiagTorus& torus);

/// Matrix R of the action induced by g on an invariant subspace, in the
/// column-vector convention used throughout:
/// g * basis.matrix()^T == basis.matrix()^T * R, so column j of R expands
/// the image of the j-th basis vector and restriction is multiplicative
/// (restrict(g*h) == restrict(g) * restrict(h)).  Restricting a Jordan
/// block to its leading coordinates yields the smaller Jordan block.
/// Throws std::invalid_argument when the subspace is not g-invariant or
/// shapes mismatch.
[[nodiscard]] Matrix restrict_to_invariant(const Matrix& g, const SubspaceBasis& basis);

/// Block-scalar wreath datum in SL_{p^a * d}(GF(p)): the torus acts by a
/// separate scalar on each of the p^a blocks of size d (determinant-one,
/// rank p^a - 1), and u is the block cyclic shift with a single Jordan
/// seed J_d.  Then u is regular unipotent (one block [p^a * d]) and
/// u^{p^a} = diag(J_d, ..., J_d).
/// Throws std::invalid_argument unless p is prime, a >= 1, d >= 1 and the
/// ambient dimension stays desk-scale.
[[nodiscard]] TorusNormalizerDatum sl_wreath(unsigned p, unsigned a, unsigned d);

/// Orthogonal wreath datum over GF(2) in GO_{2l}, l = 2^f * m: the ambient
/// form is the orthogonal sum of 2^f hyperbolic 2m-dim spaces, the torus
/// is the product of the 2^f rank-one center tori of the block GL_m's, and
/// u cycles the copies with one seed v = gl_stab_outer(m).u (a single
/// Jordan block [2m] element of GO_{2m}).  Then u has a single Jordan
/// block [2l] and u^{2^{f+1}} != 1 centralizes the torus.
/// Throws std::invalid_argument unless m >= 3 odd and f >= 1.
[[nodiscard]] TorusNormalizerDatum go_wreath(unsigned m, unsigned f);

/// Totally-singular-pair stabilizer datum over GF(2) in SO_{2l}, l >= 4
/// even: the hyperbolic ambient V = W + W* with the rank-one torus of
/// weights +1 on W and -1 on W*, and u = gl_stab_outer(l).u swapping W and
/// W*.  Then u has type [2l-2, 2], Dickson invariant 0, and u^2 != 1
/// centralizes the torus.
[[nodiscard]] TorusNormalizerDatum so_pair_stab(unsigned l);

/// Orthogonal-sum stabilizer datum over GF(2) in SO_{2l}, l = 2^s + 1 with
/// s >= 2: u = sigma + J_2 where sigma is the full-cycle permutation
/// matrix on a hyperbolic basis of the 2l-2 part (a single-block [2l-2]
/// element of GO_{2l-2}) and J_2 acts on a nondegenerate 2-dim summand;
/// the torus is the maximal torus of the big part with the two small-part
/// weight coordinates zeroed.  Then u is regular of type [2l-2, 2] in
/// SO_{2l} and the zero-weight space has dimension 2.
[[nodiscard]] TorusNormalizerDatum so_orthsum(unsigned l);

/// Wedge-square datum on dim 6 over GF(2): applies the wedge-square
/// functor to sl_wreath(2,1,2), pushing each torus weight of e_i ^ e_j to
/// w_i + w_j; the ambient quadratic form is the wedge-square (Klein) form
/// Q = c01*c23 + c02*c13 + c03*c12.  Then u has type [4,2] and the weight
/// spaces have dims {1, 4, 1} for weights {+2, 0, -2}, the two 1-dim
/// spaces being swapped by u.
[[nodiscard]] TorusNormalizerDatum sl4_wedge();

/// Classify the weight-orbit structure of a datum.
///  - Determinant-one ambient: verifies all weight spaces share one
///    dimension d and returns case_tag 0 with common_weight_dim = d.
///  - Quadratic ambient with dickson(u) = 1, or symplectic ambient (u has
///    a single Jordan block there): verifies every weight space is totally
///    singular/isotropic, that u permutes them transitively, and that the
///    spaces pair off into mutually orthogonal nondegenerate opposed-weight
///    planes V_w + V_{-w} reassembling V; returns case_tag 0.
///  - Quadratic ambient with dickson(u) = 0 (u regular in SO): returns the
///    trichotomy.  Case 1: two swapped weight spaces, dim l each with l
///    even, u^2 of type [l-1, 1] on both.  Case 2: a fixed zero-weight
///    space of dim 2 plus one transitive orbit (a power of two >= 2) of
///    totally singular spaces.  Case 3: one transitive orbit plus a
///    swapped pair of 1-dim opposed-weight spaces.  Ambient dim 6 is
///    accepted only when it lands in case 3; other dim-6 inputs are
///    rejected.
/// Throws std::invalid_argument when u does not normalize the torus and
/// std::runtime_error ("proposition violated") when no case matches.
[[nodiscard]] TorusCaseReport classify_torus_case(const TorusNormalizerDatum& datum);

/// Complete torus-aware parabolic-containment search for X = T<u>.
/// Subspace route first: for each <u>-orbit of weight spaces, the return
/// map of u to the base space is unipotent; every fixed line of it is
/// propagated around the orbit and the resulting X-invariant subspace is
/// accepted when proper (determinant-one ambient) or nonzero totally
/// singular/isotropic (quadratic/symplectic ambient).  This search is
/// complete: any X-invariant subspace of the accepted shape meets some
/// orbit's base weight space in a return-map-fixed line whose propagation
/// stays inside it.  When no subspace qualifies, the Borel–Tits route
/// checks u^M for M the order of the weight-space permutation: if
/// u^M != 1 it centralizes the torus and is returned as a
/// centralized-unipotent witness.  Returns nothing when both routes fail
/// (a certified absence, by the completeness above).
[[nodiscard]] std::optional<ContainmentWitness> containment_witness(
    const TorusNormalizerDatum& datum);

/// Matrix-level parabolic-containment search for the group generated by
/// gens.  Determinant-one ambient (empty ambient_form): spins every line
/// and returns the first proper nonzero invariant subspace.  Quadratic /
/// symplectic ambient: spins every singular / isotropic line and returns
/// the first invariant nonzero totally singular (isotropic) subspace —
/// complete because any such invariant subspace contains a line whose spin
/// stays inside it.  When no subspace qualifies, returns the first
/// provided nontrivial unipotent centralizing all generators (Borel–Tits
/// witness), if any.  Line order is deterministic: ascending leading
/// coordinate, then big-endian base-p suffix.
/// Throws std::invalid_argument when the line count exceeds 10^7 or gens
/// are unusable (empty, non-square, singular, shape mismatch).
[[nodiscard]] std::optional<ContainmentWitness> parabolic_witness(
    const std::vector<Matrix>& gens,
    const std::optional<std::variant<QuadSpace, SympSpace>>& ambient_form);

/// One row of the bounded outer-coset probe: for the swap-stabilizer
/// family, whether the torus-aware search found an invariant subspace in
/// the determinant-one ambient, and its dimension.  Raw search data; the
/// probe encodes no structural claim about outer torus normalizers.
struct OuterProbeRow {
  unsigned l = 0;
  bool subspace_found = false;
  std::size_t subspace_dim = 0;
};

/// Runs the torus-aware search over the gl_stab_outer family for
/// 3 <= l <= l_max, viewing each datum in the determinant-one ambient with
/// its rank-one weight torus.  Returns one row per l.
/// Throws std::invalid_argument when l_max < 3.
[[nodiscard]] std::vector<OuterProbeRow> al2_outer_probe(unsigned l_max);

/// Dense integer matrix for the characteristic-zero order computations.
using IntMatrix = std::vector<std::vector<long long>>;

/// Companion matrix of the p^a-th cyclotomic polynomial
/// x^{(p-1)p^{a-1}} + ... + x^{p^{a-1}} + 1, of size p^{a-1}(p-1).  Its
/// multiplicative order is exactly p^a, witnessing that an element of
/// order p^a acting faithfully on a lattice needs rank at least
/// p^{a-1}(p-1).  Throws std::invalid_argument unless p is prime, a >= 1
/// and the size stays desk-scale.
[[nodiscard]] IntMatrix cyclotomic_companion(unsigned p, unsigned a);

/// Least k >= 1 with m^k = I when k <= cap, std::nullopt otherwise.
/// Exact integer arithmetic; throws std::overflow_error if an entry
/// leaves the safe range and std::invalid_argument for non-square or
/// empty input.
[[nodiscard]] std::optional<unsigned long long> integer_matrix_order(const IntMatrix& m,
                                                                     unsigned long long cap);

/// The lower bound p^{a-1}(p-1) for the dimension of a torus admitting an
/// automorphism of order p^a (the Euler phi of p^a, attained by
/// cyclotomic_companion).  Throws std::invalid_argument unless p is prime
/// and a >= 1.
[[nodiscard]] unsigned long long min_torus_dim_for_order(unsigned p, unsigned a);

}  // namespace regulib
