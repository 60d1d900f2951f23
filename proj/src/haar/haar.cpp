#include "qito/haar/haar.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

#include "qito/cg/cg.hpp"
#include "qito/errors.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/suq2/text.hpp"

namespace qito {

namespace {

// Inverse of the square system  monomial coefficient = sum_col A(row, col) gamma_col
// for one weight block, where A holds the rational bodies of the d-functions.
struct Block {
  std::vector<PbwMonomial> rows;
  std::vector<DKey> cols;
  std::vector<std::vector<RationalFn>> inverse;  // cols x rows
};

Block build_block(int wp, int w, int jmax) {
  Block b;
  for (int deg = 0; deg <= jmax; ++deg)
    for (int a = 0; a <= deg; ++a)
      for (int bb = 0; a + bb <= deg; ++bb)
        for (int c = 0; a + bb + c <= deg; ++c) {
          const int d = deg - a - bb - c;
          const PbwMonomial mono{a, bb, c, d};
          if (mono.valid() && weight(mono) == std::make_pair(wp, w)) b.rows.push_back(mono);
        }
  for (int j = std::max(std::abs(wp), std::abs(w)); j <= jmax; j += 2) b.cols.push_back({j, wp, w});
  const std::size_t n = b.rows.size();
  if (b.cols.size() != n) throw std::logic_error("haar: non-square weight block");

  std::vector<std::vector<RationalFn>> a(n, std::vector<RationalFn>(2 * n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& body = dfun_factored(b.cols[c].j, b.cols[c].mp, b.cols[c].m).body;
    for (std::size_t r = 0; r < n; ++r) {
      auto it = body.find(b.rows[r]);
      if (it != body.end()) a[r][c] = it->second;
    }
    a[c][n + c] = RationalFn(1);
  }
  // Gauss-Jordan over the rational-function field.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("haar: singular weight block");
    std::swap(a[piv], a[col]);
    const RationalFn inv = a[col][col].inverse();
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const RationalFn f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  b.inverse.assign(n, std::vector<RationalFn>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) b.inverse[r][k] = a[r][n + k];
  return b;
}

std::mutex g_block_mutex;
std::map<std::tuple<int, int, int>, Block> g_blocks;

const Block& block(int wp, int w, int jmax) {
  const auto key = std::make_tuple(wp, w, jmax);
  {
    std::lock_guard<std::mutex> lock(g_block_mutex);
    if (auto it = g_blocks.find(key); it != g_blocks.end()) return it->second;
  }
  Block b = build_block(wp, w, jmax);
  std::lock_guard<std::mutex> lock(g_block_mutex);
  return g_blocks.try_emplace(key, std::move(b)).first->second;
}

// Splits x by weight block and by radicand: block -> radicand -> monomial -> rational coefficient.
using RadicalParts = std::map<LaurentPoly, std::map<PbwMonomial, RationalFn>, LaurentPolyLess>;

std::map<std::pair<int, int>, RadicalParts> split(const AlgElem& x, int jmax) {
  std::map<std::pair<int, int>, RadicalParts> out;
  std::string outside;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.degree() > jmax) {
      if (!outside.empty()) outside += ", ";
      outside += to_text(mono);
      continue;
    }
    for (const auto& t : c.terms()) out[weight(mono)][t.radicand][mono] = t.coeff;
  }
  if (!outside.empty())
    throw SpanExceededError("not in the span of matrix coefficients with 2j <= " + std::to_string(jmax) + ": " + outside);
  return out;
}

void solve_block(const Block& b, const RadicalParts& parts, BasisExpansion& out) {
  const std::size_t n = b.rows.size();
  for (const auto& [radicand, coeffs] : parts) {
    std::vector<RationalFn> rhs(n);
    for (std::size_t r = 0; r < n; ++r)
      if (auto it = coeffs.find(b.rows[r]); it != coeffs.end()) rhs[r] = it->second;
    for (std::size_t c = 0; c < n; ++c) {
      RationalFn gamma;
      for (std::size_t r = 0; r < n; ++r)
        if (!rhs[r].is_zero() && !b.inverse[c][r].is_zero()) gamma += b.inverse[c][r] * rhs[r];
      if (gamma.is_zero()) continue;
      const DKey& k = b.cols[c];
      const QScalar value = QScalar::radical(gamma, radicand) / dfun_factored(k.j, k.mp, k.m).prefactor;
      QScalar& slot = out[k];
      slot += value;
      if (slot.is_zero()) out.erase(k);
    }
  }
}

}  // namespace

std::pair<int, int> weight(const PbwMonomial& m) { return {m.a + m.b - m.c - m.d, m.a - m.b + m.c - m.d}; }

BasisExpansion to_matrix_coeff_basis(const AlgElem& x, int jmax) {
  if (jmax < 0) throw DomainError("negative jmax");
  BasisExpansion out;
  for (const auto& [w, parts] : split(x, jmax)) solve_block(block(w.first, w.second, jmax), parts, out);
  return out;
}

QScalar haar(const AlgElem& x, int jmax) {
  if (jmax < 0) throw DomainError("negative jmax");
  auto parts = split(x, jmax);
  auto it = parts.find({0, 0});
  if (it == parts.end()) return QScalar();
  BasisExpansion out;
  solve_block(block(0, 0, jmax), it->second, out);
  auto c = out.find(DKey{0, 0, 0});
  return c == out.end() ? QScalar() : c->second;
}

AlgElem haar_left(const Tensor2& t, int jmax) {
  AlgElem out;
  for (const auto& [key, c] : t.terms()) {
    const QScalar h = haar(AlgElem::monomial(key[0]), jmax);
    if (!h.is_zero()) out.add_term(key[1], h * c);
  }
  return out;
}

AlgElem haar_right(const Tensor2& t, int jmax) {
  AlgElem out;
  for (const auto& [key, c] : t.terms()) {
    const QScalar h = haar(AlgElem::monomial(key[1]), jmax);
    if (!h.is_zero()) out.add_term(key[0], h * c);
  }
  return out;
}

QScalar haar_triple(int r, int u, int l, int q, int t, int k, int p, int s, int j) {
  for (auto [a, b] : {std::pair{r, u}, {r, l}, {q, t}, {q, k}, {p, s}, {p, j}})
    if (!valid_jm(a, b)) throw DomainError("haar_triple: invalid index");
  if (!triangle(q, p, r)) return QScalar();
  const QScalar c = cg(q, k, p, j, r, l) * cg(q, t, p, s, r, u);
  if (c.is_zero()) return c;
  const int iu = index_of_m_twice(r, u);
  return c * QScalar::t_power(4 * iu) / f_inv_trace(r);
}

}  // namespace qito
