// SPDX-License-Identifier: MIT
//
// Frozen integer matrices of the twelve exponentiated root elements of
// the rank-two exceptional group of type G_2 on its seven-dimensional
// module.  Internal to the library; consumed and validated by the
// representation-catalogue constructors.

#pragma once

#include <array>
#include <cstddef>

namespace regulib::g2data {

inline constexpr std::size_t kDim = 7;
inline constexpr std::size_t kRootCount = 12;

/// Indices of the two simple roots (for the positive system fixed below)
/// inside kRoots / kRootElements.
inline constexpr std::size_t kLongSimple = 0;
inline constexpr std::size_t kShortSimple = 1;

/// Integer root vectors: joint eigenvalue pairs of the adjoint action of
/// the two commuting diagonal derivations that span the Cartan
/// subalgebra (see g2data.cpp).  Entries 0..5 are the positive system in
/// increasing height; entry 6+k is the negative of entry k.
extern const std::array<std::array<int, 2>, kRootCount> kRoots;

/// The exponentiated root elements as 7x7 integer matrices (column
/// convention), one per entry of kRoots.
extern const std::array<std::array<std::array<int, kDim>, kDim>, kRootCount>
    kRootElements;

/// Upper-triangular integer matrix of the invariant quadratic form
/// q(x) = x_0^2 + x_1 x_4 + x_2 x_5 + x_3 x_6.
extern const std::array<std::array<int, kDim>, kDim> kQuadForm;

}  // namespace regulib::g2data
