// SPDX-License-Identifier: MIT
//
// Derivation of the frozen data (reproducible from first principles):
//
// The split octonion algebra O over the integers is realized by Zorn
// vector matrices [[a, v], [w, b]] (a, b integers; v, w integer
// 3-vectors) with product
//
//   [[a,v],[w,b]] [[a',v'],[w',b']]
//     = [[aa' + v.w', av' + b'v - w x w'], [a'w + bw' + v x v', bb' + w.v']]
//
// and multiplicative norm N = ab - v.w.  Its derivation algebra is the
// 14-dimensional simple Lie algebra of type G_2; the two commuting
// diagonal derivations (a, v, w, b) -> (0, Av, -A^T w, 0) for
// A = diag(1,-1,0) and A = diag(1,0,-1) span a split Cartan subalgebra,
// and the twelve joint eigenvectors of their adjoint action are the root
// elements.  Each root element acts nilpotently on O; its exponential is
// an automorphism of the integral Zorn lattice fixing the identity and
// preserving the trace-zero sublattice.  The matrices below are those
// automorphisms restricted to the trace-zero basis
//
//   d = [[1,0],[0,-1]],  v_1, v_2, v_3,  w_1, w_2, w_3,
//
// in the column convention; on that basis -N is the quadratic form
// q(x) = x_0^2 + x_1 x_4 + x_2 x_5 + x_3 x_6, which every matrix
// preserves exactly over the integers.
//
// Every property consumed downstream (unipotence, form invariance,
// non-commuting opposite pairs, Jordan type and order of the product of
// the two simple-root elements, absolute irreducibility of the generated
// module) is re-validated at runtime in g2_rep; none of it is trusted
// from this file alone.

#include "g2data.hpp"

namespace regulib::g2data {

const std::array<std::array<int, 2>, kRootCount> kRoots = {{
    {{1, -1}},   // long simple
    {{0, 1}},    // short simple
    {{1, 0}},
    {{1, 1}},
    {{1, 2}},
    {{2, 1}},
    {{-1, 1}},
    {{0, -1}},
    {{-1, 0}},
    {{-1, -1}},
    {{-1, -2}},
    {{-2, -1}},
}};

const std::array<std::array<std::array<int, kDim>, kDim>, kRootCount>
    kRootElements = {{
        // root (1, -1)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 0, 1, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, -1}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (0, 1)
        {{{{1, 0, 0, 1, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 1, 0}},
          {{0, 0, 1, 0, -1, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{-2, 0, 0, -1, 0, 0, 1}}}},
        // root (1, 0)
        {{{{1, 0, 1, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, -1}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 0, 0, 1, 1, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{-2, 0, -1, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (1, 1)
        {{{{1, 0, 0, 0, 1, 0, 0}},
          {{-2, 1, 0, 0, -1, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 1, 0, 1, 0}},
          {{0, 0, -1, 0, 0, 0, 1}}}},
        // root (1, 2)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 1, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, -1, 0, 1}}}},
        // root (2, 1)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 1, 0, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, -1, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (-1, 1)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 0, 1, 1, 0, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, -1, 1}}}},
        // root (0, -1)
        {{{{1, 0, 0, 0, 0, 0, 1}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{-2, 0, 0, 1, 0, 0, -1}},
          {{0, 0, 1, 0, 1, 0, 0}},
          {{0, -1, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (-1, 0)
        {{{{1, 0, 0, 0, 0, 1, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{-2, 0, 1, 0, 0, -1, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, -1, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 1, 0, 0, 0, 0, 1}}}},
        // root (-1, -1)
        {{{{1, 1, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 1}},
          {{0, 0, 0, 1, 0, -1, 0}},
          {{-2, -1, 0, 0, 1, 0, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (-1, -2)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 0, 1, 0, 0, 0, 0}},
          {{0, 1, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, 0, -1}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
        // root (-2, -1)
        {{{{1, 0, 0, 0, 0, 0, 0}},
          {{0, 1, 0, 0, 0, 0, 0}},
          {{0, 1, 1, 0, 0, 0, 0}},
          {{0, 0, 0, 1, 0, 0, 0}},
          {{0, 0, 0, 0, 1, -1, 0}},
          {{0, 0, 0, 0, 0, 1, 0}},
          {{0, 0, 0, 0, 0, 0, 1}}}},
    }};

const std::array<std::array<int, kDim>, kDim> kQuadForm = {{
    {{1, 0, 0, 0, 0, 0, 0}},
    {{0, 0, 0, 0, 1, 0, 0}},
    {{0, 0, 0, 0, 0, 1, 0}},
    {{0, 0, 0, 0, 0, 0, 1}},
    {{0, 0, 0, 0, 0, 0, 0}},
    {{0, 0, 0, 0, 0, 0, 0}},
    {{0, 0, 0, 0, 0, 0, 0}},
}};

}  // namespace regulib::g2data
