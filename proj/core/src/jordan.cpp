// SPDX-License-Identifier: MIT

#include "regulib/jordan.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace regulib {

// ---------------------------------------------------------------------------
// JordanType
// ---------------------------------------------------------------------------

JordanType::JordanType(std::vector<unsigned> blocks) : blocks_(std::move(blocks)) {
  if (std::any_of(blocks_.begin(), blocks_.end(), [](unsigned b) { return b == 0; })) {
    throw std::invalid_argument("JordanType: block sizes must be positive");
  }
  std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
}

unsigned JordanType::dimension() const noexcept {
  unsigned total = 0;
  for (unsigned b : blocks_) total += b;
  return total;
}

unsigned JordanType::max_block() const noexcept {
  return blocks_.empty() ? 0 : blocks_.front();
}

std::string JordanType::to_string() const {
  if (blocks_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) os << '+';
    os << blocks_[i];
  }
  return os.str();
}

JordanType JordanType::parse(const std::string& text) {
  if (text == "0") return JordanType{};
  std::vector<unsigned> blocks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find('+', pos), text.size());
    const std::string token = text.substr(pos, next - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("JordanType::parse: malformed partition text");
    }
    const unsigned long value = std::stoul(token);
    if (value == 0 || value > 1'000'000) {
      throw std::invalid_argument("JordanType::parse: block size out of range");
    }
    blocks.push_back(static_cast<unsigned>(value));
    pos = next + 1;
  }
  return JordanType(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Type extraction
// ---------------------------------------------------------------------------

bool is_unipotent(const Matrix& u) {
  if (!u.is_square()) return false;
  const Matrix nil = u - Matrix::identity(u.field(), u.rows());
  Matrix power = nil;
  for (std::size_t k = 1; k < u.rows() && !power.is_zero(); ++k) power = power * nil;
  return power.is_zero() || u.rows() == 0;
}

JordanType jordan_type(const Matrix& u) {
  if (!u.is_square()) throw std::domain_error("jordan_type: matrix must be square");
  const std::size_t n = u.rows();
  const Matrix nil = u - Matrix::identity(u.field(), n);

  // ranks[k] = rank((u - I)^k); stop as soon as the power vanishes.
  std::vector<std::size_t> ranks{n};
  Matrix power = Matrix::identity(u.field(), n);
  while (ranks.back() != 0 && ranks.size() <= n) {
    power = power * nil;
    ranks.push_back(rank(power));
  }
  if (ranks.back() != 0) throw std::domain_error("jordan_type: matrix is not unipotent");

  std::vector<unsigned> blocks;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = at_least_k1; c < at_least_k; ++c) {
      blocks.push_back(static_cast<unsigned>(k));
    }
  }
  return JordanType(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Closed form and oracles
// ---------------------------------------------------------------------------

JordanType jordan_power(const JordanType& t, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("jordan_power: p must be prime");
  std::vector<unsigned> blocks;
  for (unsigned n : t.blocks()) {
    const unsigned a = n / p;
    const unsigned b = n % p;
    for (unsigned i = 0; i < b; ++i) blocks.push_back(a + 1);
    if (a > 0) {
      for (unsigned i = 0; i < p - b; ++i) blocks.push_back(a);
    }
  }
  return JordanType(std::move(blocks));
}

JordanType jordan_tensor(const JordanType& s, const JordanType& t, unsigned p) {
  const FieldPrime f(p);
  std::vector<unsigned> blocks;
  for (unsigned a : s.blocks()) {
    for (unsigned b : t.blocks()) {
      const Matrix product = kronecker(jordan_block(f, a), jordan_block(f, b));
      const JordanType part = jordan_type(product);
      blocks.insert(blocks.end(), part.blocks().begin(), part.blocks().end());
    }
  }
  return JordanType(std::move(blocks));
}

Matrix wedge_square_matrix(const Matrix& g) {
  if (!g.is_square() || g.rows() < 2) {
    throw std::invalid_argument("wedge_square_matrix: need a square matrix of dim >= 2");
  }
  const std::size_t n = g.rows();
  const FieldPrime& f = g.field();

  // Pairs (i, j), i < j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  basis.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  }

  Matrix out(f, basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [i, j] = basis[col];
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const auto [k, l] = basis[row];
      // g(e_i ^ e_j) has e_k ^ e_l coefficient g_ki g_lj - g_li g_kj.
      out.set(row, col,
              f.sub(f.mul(g.at(k, i), g.at(l, j)), f.mul(g.at(l, i), g.at(k, j))));
    }
  }
  return out;
}

JordanType jordan_wedge2(const Matrix& u) {
  return jordan_type(wedge_square_matrix(u));
}

JordanType jordan_sym2(const Matrix& u) {
  if (!u.is_square() || u.rows() < 2) {
    throw std::invalid_argument("jordan_sym2: need a square matrix of dim >= 2");
  }
  const std::size_t n = u.rows();
  const FieldPrime& f = u.field();

  // Monomials e_i e_j, i <= j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  basis.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b].first][basis[b].second] = b;
    index[basis[b].second][basis[b].first] = b;
  }

  Matrix out(f, basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [i, j] = basis[col];
    // u(e_i e_j) = (sum_k u_ki e_k)(sum_l u_lj e_l) with commuting monomials.
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint8_t uki = u.at(k, i);
      if (uki == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const std::uint8_t c = f.mul(uki, u.at(l, j));
        if (c == 0) continue;
        const std::size_t row = index[k][l];
        out.set(row, col, static_cast<long long>(out.at(row, col)) + c);
      }
    }
  }
  return jordan_type(out);
}

unsigned long long unipotent_order(const JordanType& t, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("unipotent_order: p must be prime");
  unsigned long long q = 1;
  while (q < t.max_block()) q *= p;
  return q;
}

// ---------------------------------------------------------------------------
// Realizations and enumeration
// ---------------------------------------------------------------------------

Matrix jordan_block(const FieldPrime& f, std::size_t n) {
  Matrix m = Matrix::identity(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  return m;
}

Matrix jordan_matrix(const FieldPrime& f, const JordanType& t) {
  Matrix m(f, t.dimension(), t.dimension());
  std::size_t off = 0;
  for (unsigned b : t.blocks()) {
    m.set_block(off, off, jordan_block(f, b));
    off += b;
  }
  return m;
}

std::vector<JordanType> all_partitions(unsigned n) {
  std::vector<JordanType> out;
  std::vector<unsigned> current;
  // Descending-lexicographic enumeration: place the largest feasible part
  // first, never exceeding the previous part.
  std::function<void(unsigned, unsigned)> recurse = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(JordanType(current));
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n == 0 ? 1 : n);
  return out;
}

}  // namespace regulib
