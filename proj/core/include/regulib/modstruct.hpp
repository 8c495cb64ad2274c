// SPDX-License-Identifier: MIT
//
// Module-structure analysis for matrix groups over GF(p): subspace
// spinning, exhaustive line-by-line irreducibility with certificates,
// commutant dimension, and fixed spaces.
//
// Irreducibility is decided by exhausting projective lines rather than by
// randomized methods: at desk scale this makes negative answers carry a
// witness subspace and positive answers a completed enumeration.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "regulib/exactla.hpp"
#include "regulib/forms.hpp"

namespace regulib {

/// A matrix group action on GF(p)^dim, described by a finite list of
/// invertible generators of common shape.  Inverses are adjoined once at
/// construction so that spinning is closure under the generated group,
/// not merely the generated monoid.
class ModuleAction {
 public:
  /// Throws std::invalid_argument when the list is empty, shapes or
  /// fields disagree, a generator is not square, or one is singular.
  explicit ModuleAction(std::vector<Matrix> generators);

  [[nodiscard]] const std::vector<Matrix>& generators() const noexcept {
    return gens_;
  }

  /// Generators together with their inverses (deduplicated).
  [[nodiscard]] const std::vector<Matrix>& closure_generators()
      const noexcept {
    return closure_;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return gens_.front().rows(); }
  [[nodiscard]] const FieldPrime& field() const noexcept {
    return gens_.front().field();
  }

 private:
  std::vector<Matrix> gens_;
  std::vector<Matrix> closure_;
};

/// Smallest subspace containing the seeds that is invariant under every
/// generator and every inverse, computed by echelon-form closure
/// iteration.  Throws std::invalid_argument on ambient-dimension mismatch.
[[nodiscard]] SubspaceBasis spin(const ModuleAction& action,
                                 const SubspaceBasis& seeds);

/// Outcome of the exhaustive irreducibility test.
struct IrreducibilityResult {
  /// No proper nonzero invariant subspace over the ground field.
  bool irreducible;
  /// Dimension of the algebra commuting with every generator.
  std::size_t commutant_dim;
  /// A proper invariant subspace when reducible; empty when irreducible.
  std::optional<SubspaceBasis> witness;

  /// Irreducible over every extension field: irreducible with scalar
  /// commutant.
  [[nodiscard]] bool absolutely_irreducible() const noexcept {
    return irreducible && commutant_dim == 1;
  }
};

/// Exhaustive irreducibility over GF(p): spins one representative of
/// every projective line in canonical order (ascending leading
/// coordinate, then the remaining coordinates as a big-endian base-p
/// counter) and reports the first line whose closure is proper, if any.
/// Requires (p^dim - 1)/(p - 1) <= 10^7; throws std::invalid_argument
/// beyond that cap.
[[nodiscard]] IrreducibilityResult is_absolutely_irreducible(
    const ModuleAction& action);

/// Dimension of {M : M g = g M for every generator g}, computed as the
/// kernel dimension of the stacked Sylvester system over the dim^2 matrix
/// unknowns.
[[nodiscard]] std::size_t commutant_dimension(const ModuleAction& action);

/// Kernel basis of g - I.  For a unipotent g the dimension equals the
/// number of Jordan blocks.  Throws std::invalid_argument when g is not
/// square.
[[nodiscard]] SubspaceBasis fixed_space(const Matrix& g);

}  // namespace regulib
