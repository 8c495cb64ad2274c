// SPDX-License-Identifier: MIT

#include "regulib/modstruct.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace regulib {

ModuleAction::ModuleAction(std::vector<Matrix> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) {
    throw std::invalid_argument("ModuleAction requires at least one generator");
  }
  const Matrix& first = gens_.front();
  if (!first.is_square()) {
    throw std::invalid_argument("ModuleAction generators must be square");
  }
  closure_ = gens_;
  for (const Matrix& g : gens_) {
    if (g.field() != first.field() || g.rows() != first.rows() ||
        g.cols() != first.cols()) {
      throw std::invalid_argument(
          "ModuleAction generators must share one field and shape");
    }
    auto gi = inverse(g);
    if (!gi) {
      throw std::invalid_argument("ModuleAction generators must be invertible");
    }
    if (std::find(closure_.begin(), closure_.end(), *gi) == closure_.end()) {
      closure_.push_back(*std::move(gi));
    }
  }
}

SubspaceBasis spin(const ModuleAction& action, const SubspaceBasis& seeds) {
  if (seeds.ambient_dim() != action.dim()) {
    throw std::invalid_argument("spin: seed ambient dimension mismatch");
  }
  Matrix current = row_echelon_basis(seeds.matrix());
  for (;;) {
    Matrix stacked = current;
    for (const Matrix& g : action.closure_generators()) {
      stacked = vstack(stacked, current * g.transpose());
    }
    Matrix next = row_echelon_basis(stacked);
    if (next.rows() == current.rows()) return SubspaceBasis(next);
    current = std::move(next);
  }
}

IrreducibilityResult is_absolutely_irreducible(const ModuleAction& action) {
  const FieldPrime f = action.field();
  const unsigned p = f.characteristic();
  const std::size_t n = action.dim();

  constexpr unsigned long long kLineCap = 10'000'000;
  unsigned long long lines = 0;
  unsigned long long power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lines += power;
    if (lines > kLineCap) {
      throw std::invalid_argument(
          "is_absolutely_irreducible: projective line count exceeds the 10^7 "
          "cap");
    }
    power *= p;
  }

  const std::size_t cdim = commutant_dimension(action);

  // Suffix place values for the big-endian counter over coordinates
  // lead+1 .. n-1.
  std::vector<unsigned long long> place(n, 1);
  for (std::size_t j = n; j-- > 1;) place[j - 1] = place[j] * p;

  for (std::size_t lead = 0; lead < n; ++lead) {
    const unsigned long long suffix_count = place[lead];
    for (unsigned long long c = 0; c < suffix_count; ++c) {
      Matrix v(f, 1, n);
      v.set(0, lead, 1);
      for (std::size_t j = lead + 1; j < n; ++j) {
        v.set(0, j, static_cast<long long>((c / place[j]) % p));
      }
      SubspaceBasis closure = spin(action, SubspaceBasis(v));
      if (closure.dim() < n) {
        return {false, cdim, std::move(closure)};
      }
    }
  }
  return {true, cdim, std::nullopt};
}

std::size_t commutant_dimension(const ModuleAction& action) {
  const FieldPrime f = action.field();
  const std::size_t n = action.dim();
  const std::size_t nn = n * n;
  const std::size_t gcount = action.generators().size();

  // Unknown M_{kl} lives in column k*n + l; equation (g, i, j) states
  // (g M - M g)_{ij} = 0.
  Matrix coeff(f, gcount * nn, nn);
  std::size_t r = 0;
  for (const Matrix& g : action.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t col = k * n + j;
          coeff.set(r, col,
                    static_cast<long long>(coeff.at(r, col)) + g.at(i, k));
        }
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t col = i * n + l;
          coeff.set(r, col,
                    static_cast<long long>(coeff.at(r, col)) - g.at(l, j));
        }
        ++r;
      }
    }
  }
  return nn - rank(coeff);
}

SubspaceBasis fixed_space(const Matrix& g) {
  if (!g.is_square()) {
    throw std::invalid_argument("fixed_space requires a square matrix");
  }
  return SubspaceBasis(
      kernel_basis(g - Matrix::identity(g.field(), g.rows())));
}

}  // namespace regulib
