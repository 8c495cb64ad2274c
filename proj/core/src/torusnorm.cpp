// SPDX-License-Identifier: MIT

#include "regulib/torusnorm.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "regulib/classical.hpp"
#include "regulib/jordan.hpp"
#include "regulib/modstruct.hpp"

namespace regulib {

namespace {

constexpr unsigned long long kLineCap = 10'000'000;

/// (p^dim - 1)/(p - 1) <= cap, computed without overflow.
bool line_count_within(unsigned p, std::size_t dim, unsigned long long cap) {
  unsigned long long total = 0;
  unsigned long long term = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += term;
    if (total > cap) return false;
    if (term > cap) return false;
    term *= p;
  }
  return true;
}

/// Calls fn with one representative row vector (1 x dim) per projective
/// line, in canonical order: ascending leading coordinate, remaining
/// coordinates running through a big-endian base-p counter.  Stops early
/// when fn returns true; returns whether it stopped.
template <typename Fn>
bool for_each_line(const FieldPrime& f, std::size_t dim, Fn&& fn) {
  const unsigned p = f.characteristic();
  for (std::size_t lead = 0; lead < dim; ++lead) {
    unsigned long long count = 1;
    for (std::size_t j = lead + 1; j < dim; ++j) count *= p;
    for (unsigned long long c = 0; c < count; ++c) {
      Matrix v(f, 1, dim);
      v.set(0, lead, 1);
      unsigned long long rest = c;
      for (std::size_t j = dim; j-- > lead + 1;) {
        v.set(0, j, static_cast<long long>(rest % p));
        rest /= p;
      }
      if (fn(v)) return true;
    }
  }
  return false;
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t integer_rank(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows.front().empty()) return 0;
  const std::size_t nr = rows.size();
  const std::size_t nc = rows.front().size();
  std::vector<std::vector<__int128>> a(nr, std::vector<__int128>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("integer_rank: ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = rows[i][j];
  }
  std::size_t r = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// <u>-orbits of the permutation, each listed from its smallest element,
/// orbits ordered by smallest element.
std::vector<std::vector<std::size_t>> permutation_orbits(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = k;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = perm[cur];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_zero_weight(const std::vector<long long>& w) {
  return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
}

std::vector<long long> negated(const std::vector<long long>& w) {
  std::vector<long long> out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [](long long x) { return -x; });
  return out;
}

const Matrix& ambient_gram(const std::variant<QuadSpace, SympSpace>& form) {
  if (std::holds_alternative<QuadSpace>(form)) return std::get<QuadSpace>(form).gram();
  return std::get<SympSpace>(form).gram();
}

std::size_t ambient_form_dim(const std::variant<QuadSpace, SympSpace>& form) {
  if (std::holds_alternative<QuadSpace>(form)) return std::get<QuadSpace>(form).dim();
  return std::get<SympSpace>(form).dim();
}

bool totally_deg(const SubspaceBasis& s, const std::variant<QuadSpace, SympSpace>& form) {
  if (std::holds_alternative<QuadSpace>(form)) {
    return is_totally_singular(s, std::get<QuadSpace>(form));
  }
  return is_totally_isotropic(s, std::get<SympSpace>(form));
}

/// Verifies the cheap construction postconditions shared by every builder:
/// u normalizes the torus and, when the ambient carries a form, u is an
/// isometry of it.  These are theorem-backed and never expected to fail.
TorusNormalizerDatum finalize(TorusNormalizerDatum datum) {
  if (!normalizes_torus(datum.u, datum.torus)) {
    throw std::logic_error(datum.construction + ": constructed u does not normalize the torus");
  }
  if (datum.ambient_form) {
    const bool ok = std::holds_alternative<QuadSpace>(*datum.ambient_form)
                        ? is_isometry(datum.u, std::get<QuadSpace>(*datum.ambient_form))
                        : is_isometry(datum.u, std::get<SympSpace>(*datum.ambient_form));
    if (!ok) {
      throw std::logic_error(datum.construction + ": constructed u is not an ambient isometry");
    }
  }
  return datum;
}

/// Propagates one line around a weight-space orbit: rows line, line*u^T,
/// ..., line*(u^T)^{t-1}.
SubspaceBasis propagate_line(const Matrix& line, const Matrix& u, std::size_t t) {
  Matrix stacked = line;
  Matrix current = line;
  const Matrix ut = u.transpose();
  for (std::size_t j = 1; j < t; ++j) {
    current = current * ut;
    stacked = vstack(stacked, current);
  }
  return SubspaceBasis(stacked);
}

}  // namespace

DiagTorus::DiagTorus(unsigned rank, std::vector<std::vector<long long>> weights,
                     Matrix basis_change)
    : rank_(rank), weights_(std::move(weights)), basis_change_(std::move(basis_change)) {
  if (rank_ == 0) throw std::invalid_argument("DiagTorus: rank must be >= 1");
  if (weights_.empty()) throw std::invalid_argument("DiagTorus: need at least one weight");
  for (const auto& w : weights_) {
    if (w.size() != rank_) {
      throw std::invalid_argument("DiagTorus: every weight vector must have length rank");
    }
  }
  if (!basis_change_.is_square() || basis_change_.rows() != weights_.size()) {
    throw std::invalid_argument("DiagTorus: basis_change must be square of size dim");
  }
  if (regulib::rank(basis_change_) != basis_change_.rows()) {
    throw std::invalid_argument("DiagTorus: basis_change must be invertible");
  }
}

DiagTorus::DiagTorus(unsigned rank, std::vector<std::vector<long long>> weights,
                     const FieldPrime& field)
    : DiagTorus(rank, weights, Matrix::identity(field, weights.size())) {}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::invariant_subspace:
      return "invariant-subspace";
    case WitnessKind::invariant_totally_singular_subspace:
      return "invariant-totally-singular-subspace";
    case WitnessKind::centralized_unipotent:
      return "centralized-unipotent";
  }
  throw std::logic_error("to_string(WitnessKind): unknown kind");
}

std::vector<std::pair<std::vector<long long>, SubspaceBasis>> weight_spaces(
    const DiagTorus& torus) {
  const std::size_t n = torus.dim();
  std::vector<std::vector<long long>> distinct;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = torus.weights()[i];
    const auto it = std::find(distinct.begin(), distinct.end(), w);
    if (it == distinct.end()) {
      distinct.push_back(w);
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(it - distinct.begin())].push_back(i);
    }
  }
  std::vector<std::pair<std::vector<long long>, SubspaceBasis>> out;
  out.reserve(groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    Matrix rows(torus.field(), groups[k].size(), n);
    for (std::size_t r = 0; r < groups[k].size(); ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        rows.set(r, j, torus.basis_change().at(groups[k][r], j));
      }
    }
    out.emplace_back(distinct[k], SubspaceBasis(rows));
  }
  return out;
}

std::optional<std::vector<std::size_t>> normalizes_torus(const Matrix& u,
                                                         const DiagTorus& torus) {
  if (!u.is_square() || u.rows() != torus.dim() || !(u.field() == torus.field())) {
    return std::nullopt;
  }
  const auto spaces = weight_spaces(torus);
  const std::size_t count = spaces.size();
  const Matrix ut = u.transpose();
  std::vector<std::size_t> perm(count, count);
  std::vector<bool> hit(count, false);
  for (std::size_t k = 0; k < count; ++k) {
    const SubspaceBasis image(spaces[k].second.matrix() * ut);
    bool found = false;
    for (std::size_t j = 0; j < count; ++j) {
      if (spaces[j].second == image) {
        if (hit[j]) return std::nullopt;
        hit[j] = true;
        perm[k] = j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  // Lattice consistency: the induced map on weight vectors must extend
  // Q-linearly (rows of the images must stay in the row space of the
  // weight matrix).  Being then a bijection of the generating multiset it
  // is an automorphism of the weight lattice, of determinant +-1.
  const unsigned r = torus.rank();
  std::vector<std::vector<long long>> weight_rows(count, std::vector<long long>(r));
  std::vector<std::vector<long long>> concat(count, std::vector<long long>(2 * r));
  for (std::size_t k = 0; k < count; ++k) {
    for (unsigned j = 0; j < r; ++j) {
      weight_rows[k][j] = spaces[k].first[j];
      concat[k][j] = spaces[k].first[j];
      concat[k][r + j] = spaces[perm[k]].first[j];
    }
  }
  if (integer_rank(concat) != integer_rank(weight_rows)) return std::nullopt;
  return perm;
}

bool centralizes_torus(const Matrix& g, const DiagTorus& torus) {
  if (!g.is_square() || g.rows() != torus.dim() || !(g.field() == torus.field())) {
    return false;
  }
  const Matrix gt = g.transpose();
  for (const auto& [w, space] : weight_spaces(torus)) {
    const Matrix images = space.matrix() * gt;
    for (std::size_t i = 0; i < images.rows(); ++i) {
      if (!space.contains(images.block(i, 0, 1, images.cols()))) return false;
    }
  }
  return true;
}

Matrix restrict_to_invariant(const Matrix& g, const SubspaceBasis& basis) {
  if (!g.is_square() || g.cols() != basis.ambient_dim()) {
    throw std::invalid_argument("restrict_to_invariant: shape mismatch");
  }
  if (basis.dim() == 0) return Matrix(g.field(), 0, 0);
  // Solve g * W^T == W^T * R for R: column j of R expands the image of the
  // j-th basis vector in the basis, matching the library-wide convention of
  // matrices acting on column vectors.
  const Matrix images = basis.matrix() * g.transpose();
  const auto sol = solve_linear(basis.matrix().transpose(), images.transpose());
  if (!sol) throw std::invalid_argument("restrict_to_invariant: subspace is not invariant");
  return *sol;
}

TorusNormalizerDatum sl_wreath(unsigned p, unsigned a, unsigned d) {
  const FieldPrime f(p);  // validates primality and range
  if (a < 1) throw std::invalid_argument("sl_wreath: need a >= 1");
  if (d < 1) throw std::invalid_argument("sl_wreath: need d >= 1");
  unsigned long long m = 1;
  for (unsigned i = 0; i < a; ++i) {
    m *= p;
    if (m * d > 4096) throw std::invalid_argument("sl_wreath: ambient dimension too large");
  }
  const std::size_t blocks = static_cast<std::size_t>(m);
  const std::size_t n = blocks * d;

  Matrix u(f, n, n);
  const Matrix eye = Matrix::identity(f, d);
  for (std::size_t j = 0; j + 1 < blocks; ++j) u.set_block((j + 1) * d, j * d, eye);
  u.set_block(0, (blocks - 1) * d, jordan_block(f, d));

  const unsigned rank = static_cast<unsigned>(blocks - 1);
  std::vector<std::vector<long long>> weights(n, std::vector<long long>(rank, 0));
  for (std::size_t j = 0; j < blocks; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      if (j + 1 < blocks) {
        weights[j * d + i][j] = 1;
      } else {
        std::fill(weights[j * d + i].begin(), weights[j * d + i].end(), -1);
      }
    }
  }

  return finalize({DiagTorus(rank, std::move(weights), f),
                   std::move(u),
                   std::nullopt,
                   "sl_wreath",
                   {p, a, d}});
}

TorusNormalizerDatum go_wreath(unsigned m, unsigned f) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("go_wreath: need m >= 3 odd");
  if (f < 1) throw std::invalid_argument("go_wreath: need f >= 1");
  if (f > 10 || 2ull * m * (1ull << f) > 4096) {
    throw std::invalid_argument("go_wreath: ambient dimension too large");
  }
  const RegularRep seed = gl_stab_outer(m, 2);
  const FieldPrime f2 = seed.u.field();
  const std::size_t copies = std::size_t{1} << f;
  const std::size_t block = 2 * static_cast<std::size_t>(m);
  const std::size_t n = copies * block;

  Matrix u(f2, n, n);
  const Matrix eye = Matrix::identity(f2, block);
  for (std::size_t j = 0; j + 1 < copies; ++j) u.set_block((j + 1) * block, j * block, eye);
  u.set_block(0, (copies - 1) * block, seed.u);

  const Matrix& copy_quad = std::get<QuadSpace>(*seed.space).quad();
  Matrix quad = copy_quad;
  for (std::size_t j = 1; j < copies; ++j) quad = direct_sum(quad, copy_quad);

  std::vector<std::vector<long long>> weights(n,
                                              std::vector<long long>(copies, 0));
  for (std::size_t j = 0; j < copies; ++j) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      weights[j * block + i][j] = 1;
      weights[j * block + m + i][j] = -1;
    }
  }

  return finalize({DiagTorus(static_cast<unsigned>(copies), std::move(weights), f2),
                   std::move(u),
                   QuadSpace(std::move(quad)),
                   "go_wreath",
                   {m, f}});
}

TorusNormalizerDatum so_pair_stab(unsigned l) {
  if (l < 4 || l % 2 != 0) throw std::invalid_argument("so_pair_stab: need l >= 4 even");
  const RegularRep seed = gl_stab_outer(l, 2);
  const FieldPrime f2 = seed.u.field();
  const std::size_t n = 2 * static_cast<std::size_t>(l);
  std::vector<std::vector<long long>> weights(n, std::vector<long long>(1, 0));
  for (std::size_t i = 0; i < l; ++i) {
    weights[i][0] = 1;
    weights[l + i][0] = -1;
  }
  return finalize({DiagTorus(1, std::move(weights), f2),
                   seed.u,
                   std::get<QuadSpace>(*seed.space),
                   "so_pair_stab",
                   {l}});
}

TorusNormalizerDatum so_orthsum(unsigned l) {
  const bool power_of_two = l >= 5 && ((l - 1) & (l - 2)) == 0;
  if (!power_of_two) {
    throw std::invalid_argument("so_orthsum: need l = 2^s + 1 with s >= 2");
  }
  const FieldPrime f2(2);
  const std::size_t big = 2 * static_cast<std::size_t>(l) - 2;

  // Full cycle on the hyperbolic basis e_1..e_{l-1}, f_1..f_{l-1}: a
  // monomial single-block isometry of Q = sum a_i b_i.
  Matrix sigma(f2, big, big);
  for (std::size_t i = 0; i < big; ++i) sigma.set((i + 1) % big, i, 1);

  const Matrix j2 = jordan_block(f2, 2);
  const auto small = first_nondegenerate_quadratic(invariant_quadratic_forms(j2));
  if (!small) throw std::logic_error("so_orthsum: no invariant quadratic for the 2-dim part");

  const Matrix u = direct_sum(sigma, j2);
  QuadSpace space(direct_sum(QuadSpace::hyperbolic(f2, l - 1).quad(), small->quad()));

  std::vector<std::vector<long long>> weights(big + 2,
                                              std::vector<long long>(l - 1, 0));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(l); ++i) {
    weights[i][i] = 1;
    weights[(l - 1) + i][i] = -1;
  }

  return finalize({DiagTorus(l - 1, std::move(weights), f2),
                   u,
                   std::move(space),
                   "so_orthsum",
                   {l}});
}

TorusNormalizerDatum sl4_wedge() {
  const TorusNormalizerDatum base = sl_wreath(2, 1, 2);
  const FieldPrime f2 = base.u.field();
  const Matrix u6 = wedge_square_matrix(base.u);

  // Wedge-square (Klein) quadratic form on the lex pair basis
  // (01),(02),(03),(12),(13),(23): Q = c01*c23 + c02*c13 + c03*c12.
  Matrix quad(f2, 6, 6);
  quad.set(0, 5, 1);
  quad.set(1, 4, 1);
  quad.set(2, 3, 1);

  // Push each weight of e_i ^ e_j to w_i + w_j.
  std::vector<std::vector<long long>> weights;
  weights.reserve(6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<long long> w(base.torus.rank(), 0);
      for (unsigned k = 0; k < base.torus.rank(); ++k) {
        w[k] = base.torus.weights()[i][k] + base.torus.weights()[j][k];
      }
      weights.push_back(std::move(w));
    }
  }

  return finalize({DiagTorus(base.torus.rank(), std::move(weights), f2),
                   u6,
                   QuadSpace(std::move(quad)),
                   "sl4_wedge",
                   {}});
}

TorusCaseReport classify_torus_case(const TorusNormalizerDatum& datum) {
  const auto perm = normalizes_torus(datum.u, datum.torus);
  if (!perm) {
    throw std::invalid_argument("classify_torus_case: u does not normalize the torus");
  }
  const auto spaces = weight_spaces(datum.torus);
  const auto orbits = permutation_orbits(*perm);
  const std::size_t n = datum.torus.dim();

  TorusCaseReport report;
  for (const auto& orbit : orbits) report.orbit_sizes.push_back(orbit.size());
  std::size_t zero_index = spaces.size();
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (is_zero_weight(spaces[k].first)) {
      zero_index = k;
      report.zero_weight_dim = spaces[k].second.dim();
    }
  }

  if (!datum.ambient_form) {
    // Equal-dimension report: all weight spaces of a torus normalized by a
    // regular unipotent element of the determinant-one group share one
    // dimension.
    const std::size_t d = spaces.front().second.dim();
    for (const auto& [w, space] : spaces) {
      if (space.dim() != d) {
        throw std::runtime_error(
            "proposition violated: weight spaces of unequal dimension in the "
            "determinant-one ambient");
      }
    }
    report.common_weight_dim = d;
    return report;
  }

  const bool symplectic = std::holds_alternative<SympSpace>(*datum.ambient_form);
  const bool single_block = !symplectic && jordan_type(datum.u).blocks().size() == 1;

  if (symplectic || single_block) {
    // Paired totally-singular decomposition: one transitive orbit of
    // totally singular/isotropic weight spaces pairing off into mutually
    // orthogonal nondegenerate opposed-weight planes.
    if (orbits.size() != 1) {
      throw std::runtime_error("proposition violated: weight spaces are not one orbit");
    }
    if (zero_index != spaces.size()) {
      throw std::runtime_error("proposition violated: zero weight in the paired decomposition");
    }
    const Matrix& gram = ambient_gram(*datum.ambient_form);
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      if (!totally_deg(spaces[k].second, *datum.ambient_form)) {
        throw std::runtime_error("proposition violated: weight space is not totally singular");
      }
      const auto opposite = negated(spaces[k].first);
      std::size_t opp = spaces.size();
      for (std::size_t j = 0; j < spaces.size(); ++j) {
        if (spaces[j].first == opposite) opp = j;
      }
      if (opp == spaces.size() || opp == k) {
        throw std::runtime_error("proposition violated: missing opposed weight");
      }
      for (std::size_t j = 0; j < spaces.size(); ++j) {
        const Matrix pairing = spaces[k].second.matrix() * gram * spaces[j].second.matrix().transpose();
        if (j == opp || j == k) {
          if (j == opp) {
            const Matrix pair_rows = vstack(spaces[k].second.matrix(), spaces[j].second.matrix());
            const Matrix pair_gram = pair_rows * gram * pair_rows.transpose();
            if (rank(pair_gram) != pair_rows.rows()) {
              throw std::runtime_error("proposition violated: degenerate opposed pair");
            }
          }
          continue;
        }
        if (!pairing.is_zero()) {
          throw std::runtime_error("proposition violated: non-orthogonal weight spaces");
        }
      }
    }
    report.common_weight_dim = spaces.front().second.dim();
    return report;
  }

  // Orthogonal trichotomy for a non-single-block (type [2l-2, 2]) element.
  const QuadSpace& space = std::get<QuadSpace>(*datum.ambient_form);
  if (n < 6 || n % 2 != 0) {
    throw std::invalid_argument("classify_torus_case: trichotomy needs even ambient dim >= 6");
  }
  const std::size_t l = n / 2;

  const auto nonzero_singular = [&]() {
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      if (k == zero_index) continue;
      if (!is_totally_singular(spaces[k].second, space)) {
        throw std::runtime_error("proposition violated: nonzero weight space not totally singular");
      }
    }
  };

  if (spaces.size() == 2 && orbits.size() == 1 && zero_index == spaces.size()) {
    // Case 1: two swapped halves, l even, u^2 of type [l-1, 1] on both.
    if (l % 2 != 0) throw std::runtime_error("proposition violated: case-1 shape with odd l");
    if (spaces[0].second.dim() != l || spaces[1].second.dim() != l) {
      throw std::runtime_error("proposition violated: case-1 halves of unequal dimension");
    }
    if (spaces[1].first != negated(spaces[0].first)) {
      throw std::runtime_error("proposition violated: case-1 weights not opposed");
    }
    nonzero_singular();
    const Matrix u2 = datum.u.pow(2);
    const JordanType expected(std::vector<unsigned>{static_cast<unsigned>(l - 1), 1});
    for (const auto& [w, half] : spaces) {
      if (jordan_type(restrict_to_invariant(u2, half)) != expected) {
        throw std::runtime_error("proposition violated: case-1 square has wrong block sizes");
      }
    }
    report.case_tag = 1;
  } else if (zero_index != spaces.size() && report.zero_weight_dim == 2 &&
             (*perm)[zero_index] == zero_index && orbits.size() == 2) {
    // Case 2: fixed 2-dim zero-weight space plus one transitive orbit of
    // 2^s >= 2 totally singular spaces.
    const std::size_t moving = spaces.size() - 1;
    if (moving < 2 || (moving & (moving - 1)) != 0) {
      throw std::runtime_error("proposition violated: case-2 orbit is not a 2-power of spaces");
    }
    nonzero_singular();
    report.case_tag = 2;
  } else if (orbits.size() == 2) {
    // Case 3: one transitive orbit plus a swapped pair of 1-dim
    // opposed-weight spaces.
    const auto& pair_orbit = orbits[0].size() == 2 &&
                                     spaces[orbits[0][0]].second.dim() == 1 &&
                                     spaces[orbits[0][1]].second.dim() == 1
                                 ? orbits[0]
                                 : orbits[1];
    if (pair_orbit.size() != 2 || spaces[pair_orbit[0]].second.dim() != 1 ||
        spaces[pair_orbit[1]].second.dim() != 1 ||
        spaces[pair_orbit[1]].first != negated(spaces[pair_orbit[0]].first) ||
        is_zero_weight(spaces[pair_orbit[0]].first)) {
      throw std::runtime_error("proposition violated: no swapped opposed 1-dim pair");
    }
    nonzero_singular();
    report.case_tag = 3;
  } else {
    throw std::runtime_error("proposition violated: weight-orbit structure matches no case");
  }

  if (n == 6 && report.case_tag != 3) {
    throw std::runtime_error(
        "proposition violated: ambient dimension 6 admits only the wedge-square case");
  }
  return report;
}

std::optional<ContainmentWitness> containment_witness(const TorusNormalizerDatum& datum) {
  const auto perm = normalizes_torus(datum.u, datum.torus);
  if (!perm) {
    throw std::invalid_argument("containment_witness: u does not normalize the torus");
  }
  const auto spaces = weight_spaces(datum.torus);
  const std::size_t n = datum.torus.dim();

  // Subspace route: propagate every return-map-fixed line of every orbit.
  for (const auto& orbit : permutation_orbits(*perm)) {
    const std::size_t t = orbit.size();
    const SubspaceBasis& base = spaces[orbit.front()].second;
    const Matrix ret = restrict_to_invariant(datum.u.pow(t), base);
    // Fixed coefficient vectors c with ret * c == c; a fixed line of the
    // return map is then (c as a row) * base.matrix().
    const SubspaceBasis fixed = fixed_space(ret);
    if (fixed.dim() == 0) continue;
    if (!line_count_within(datum.torus.field().characteristic(), fixed.dim(), kLineCap)) {
      throw std::invalid_argument("containment_witness: fixed-line enumeration over cap");
    }
    std::optional<ContainmentWitness> found;
    for_each_line(datum.torus.field(), fixed.dim(), [&](const Matrix& coef) {
      const Matrix line = (coef * fixed.matrix()) * base.matrix();
      const SubspaceBasis propagated = propagate_line(line, datum.u, t);
      if (!datum.ambient_form) {
        if (propagated.dim() < n) {
          found = ContainmentWitness{WitnessKind::invariant_subspace, propagated};
        }
      } else if (totally_deg(propagated, *datum.ambient_form)) {
        found = ContainmentWitness{WitnessKind::invariant_totally_singular_subspace, propagated};
      }
      return found.has_value();
    });
    if (found) return found;
  }

  // Borel–Tits route: u^M for M the order of the weight-space permutation
  // centralizes the torus; it is a witness when nontrivial.  By the
  // completeness of the subspace route this branch never fires in
  // practice (a centralized unipotent forces an invariant totally
  // singular subspace to exist), but it is kept as a defensive second
  // certificate route.
  unsigned long long order = 1;
  for (const auto& orbit : permutation_orbits(*perm)) {
    order = std::lcm(order, static_cast<unsigned long long>(orbit.size()));
  }
  const Matrix um = datum.u.pow(order);
  if (!um.is_identity()) {
    return ContainmentWitness{WitnessKind::centralized_unipotent, um};
  }
  return std::nullopt;
}

std::optional<ContainmentWitness> parabolic_witness(
    const std::vector<Matrix>& gens,
    const std::optional<std::variant<QuadSpace, SympSpace>>& ambient_form) {
  const ModuleAction action(gens);  // validates shape and invertibility
  const std::size_t n = action.dim();
  const FieldPrime& f = action.field();
  if (ambient_form && ambient_form_dim(*ambient_form) != n) {
    throw std::invalid_argument("parabolic_witness: ambient form dimension mismatch");
  }
  if (!line_count_within(f.characteristic(), n, kLineCap)) {
    throw std::invalid_argument("parabolic_witness: line enumeration over cap");
  }

  const QuadSpace* quad = nullptr;
  if (ambient_form && std::holds_alternative<QuadSpace>(*ambient_form)) {
    quad = &std::get<QuadSpace>(*ambient_form);
  }

  std::optional<ContainmentWitness> found;
  for_each_line(f, n, [&](const Matrix& v) {
    if (quad != nullptr && quad->q(v) != 0) return false;
    const SubspaceBasis spun = spin(action, SubspaceBasis(v));
    if (!ambient_form) {
      if (spun.dim() < n) {
        found = ContainmentWitness{WitnessKind::invariant_subspace, spun};
      }
    } else if (totally_deg(spun, *ambient_form)) {
      found = ContainmentWitness{WitnessKind::invariant_totally_singular_subspace, spun};
    }
    return found.has_value();
  });
  if (found) return found;

  // Borel–Tits scan over the provided elements.
  for (const Matrix& g : gens) {
    if (g.is_identity() || !is_unipotent(g)) continue;
    const bool central = std::all_of(gens.begin(), gens.end(),
                                     [&](const Matrix& h) { return g * h == h * g; });
    if (central) return ContainmentWitness{WitnessKind::centralized_unipotent, g};
  }
  return std::nullopt;
}

std::vector<OuterProbeRow> al2_outer_probe(unsigned l_max) {
  if (l_max < 3) throw std::invalid_argument("al2_outer_probe: need l_max >= 3");
  std::vector<OuterProbeRow> rows;
  for (unsigned l = 3; l <= l_max; ++l) {
    const RegularRep seed = gl_stab_outer(l, 2);
    const std::size_t n = 2 * static_cast<std::size_t>(l);
    std::vector<std::vector<long long>> weights(n, std::vector<long long>(1, 0));
    for (std::size_t i = 0; i < l; ++i) {
      weights[i][0] = 1;
      weights[l + i][0] = -1;
    }
    const TorusNormalizerDatum datum{DiagTorus(1, std::move(weights), seed.u.field()),
                                     seed.u,
                                     std::nullopt,
                                     "al2_outer_probe",
                                     {l}};
    OuterProbeRow row;
    row.l = l;
    if (const auto witness = containment_witness(datum);
        witness && witness->kind == WitnessKind::invariant_subspace) {
      row.subspace_found = true;
      row.subspace_dim = std::get<SubspaceBasis>(witness->data).dim();
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix cyclotomic_companion(unsigned p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic_companion: p must be prime");
  if (a < 1) throw std::invalid_argument("cyclotomic_companion: need a >= 1");
  const unsigned long long phi = min_torus_dim_for_order(p, a);
  if (phi > 4096) throw std::invalid_argument("cyclotomic_companion: size too large");
  const unsigned long long step = phi / (p - 1);  // p^{a-1}
  const std::size_t size = static_cast<std::size_t>(phi);
  IntMatrix out(size, std::vector<long long>(size, 0));
  for (std::size_t i = 0; i + 1 < size; ++i) out[i + 1][i] = 1;
  // Last column: -(coefficients of x^i below the leading term); the
  // p^a-th cyclotomic polynomial is sum_{k=0}^{p-1} x^{k p^{a-1}}.
  for (std::size_t i = 0; i < size; ++i) {
    if (i % step == 0) out[i][size - 1] = -1;
  }
  return out;
}

std::optional<unsigned long long> integer_matrix_order(const IntMatrix& m,
                                                       unsigned long long cap) {
  if (m.empty()) throw std::invalid_argument("integer_matrix_order: empty matrix");
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("integer_matrix_order: not square");
  }
  const auto is_ident = [n](const IntMatrix& x) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x[i][j] != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  };
  constexpr __int128 kSafe = static_cast<__int128>(4) * 1000 * 1000 * 1000 * 1000 * 1000 * 1000;
  IntMatrix acc = m;
  for (unsigned long long k = 1; k <= cap; ++k) {
    if (is_ident(acc)) return k;
    IntMatrix next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        __int128 sum = 0;
        for (std::size_t t = 0; t < n; ++t) {
          sum += static_cast<__int128>(acc[i][t]) * m[t][j];
        }
        if (sum > kSafe || sum < -kSafe) {
          throw std::overflow_error("integer_matrix_order: entries exceeded safe range");
        }
        next[i][j] = static_cast<long long>(sum);
      }
    }
    acc = std::move(next);
  }
  return std::nullopt;
}

unsigned long long min_torus_dim_for_order(unsigned p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("min_torus_dim_for_order: p must be prime");
  if (a < 1) throw std::invalid_argument("min_torus_dim_for_order: need a >= 1");
  unsigned long long result = p - 1;
  for (unsigned i = 1; i < a; ++i) {
    if (result > (1ull << 62) / p) {
      throw std::overflow_error("min_torus_dim_for_order: result out of range");
    }
    result *= p;
  }
  return result;
}

}  // namespace regulib
