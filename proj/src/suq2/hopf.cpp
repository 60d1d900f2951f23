#include "qito/suq2/hopf.hpp"

#include <mutex>

namespace qito {

namespace {

using Coprod = std::vector<std::pair<std::array<PbwMonomial, 2>, LaurentPoly>>;
using CoprodMap = std::map<std::array<PbwMonomial, 2>, LaurentPoly>;

const PbwMonomial kX{1, 0, 0, 0}, kU{0, 1, 0, 0}, kV{0, 0, 1, 0}, kY{0, 0, 0, 1};

Coprod generator_coproduct(char g) {
  const LaurentPoly one(1);
  switch (g) {
    case 'X': return {{{kX, kX}, one}, {{kU, kV}, one}};
    case 'Y': return {{{kV, kU}, one}, {{kY, kY}, one}};
    case 'U': return {{{kX, kU}, one}, {{kU, kY}, one}};
    default: return {{{kV, kX}, one}, {{kY, kV}, one}};
  }
}

Coprod times(const Coprod& x, const Coprod& y) {
  CoprodMap acc;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y)
      for (const auto& [m0, p0] : monomial_product(kx[0], ky[0]))
        for (const auto& [m1, p1] : monomial_product(kx[1], ky[1])) {
          const LaurentPoly c = cx * cy * p0 * p1;
          auto [it, inserted] = acc.try_emplace({m0, m1}, c);
          if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
  return Coprod(acc.begin(), acc.end());
}

std::mutex g_coproduct_mutex;
std::map<PbwMonomial, Coprod> g_coproduct_cache;

// Image of X^a U^b V^c Y^d under an antihomomorphism swapping X and Y and
// scaling U, V by -t^k: (-1)^(b+c) t^(ku*b + kv*c) X^d U^b' V^c' Y^a, where
// (b', c') = (c, b) when the map also swaps U and V.
AlgElem anti_image(const PbwMonomial& m, int t_exp_per_u, int t_exp_per_v, bool swap_uv) {
  const int b = swap_uv ? m.c : m.b;
  const int c = swap_uv ? m.b : m.c;
  const PbwMonomial left{m.d, b, c, 0};
  const PbwMonomial right{0, 0, 0, m.a};
  LaurentPoly coeff = LaurentPoly::monomial(Rational((m.b + m.c) % 2 == 0 ? 1 : -1),
                                            t_exp_per_u * m.b + t_exp_per_v * m.c);
  AlgElem out;
  for (const auto& [mm, p] : monomial_product(left, right)) out.add_term(mm, QScalar(coeff * p));
  return out;
}

template <class F>
AlgElem linear_extend(const AlgElem& x, F&& on_monomial) {
  AlgElem out;
  for (const auto& [m, c] : x.terms()) out += on_monomial(m) * c;
  return out;
}

}  // namespace

const Coprod& monomial_coproduct(const PbwMonomial& m) {
  {
    std::lock_guard<std::mutex> lock(g_coproduct_mutex);
    auto it = g_coproduct_cache.find(m);
    if (it != g_coproduct_cache.end()) return it->second;
  }
  Coprod res;
  if (m.is_one()) {
    res = {{{PbwMonomial{}, PbwMonomial{}}, LaurentPoly(1)}};
  } else {
    // Peel off the last generator: m = m' g exactly.
    PbwMonomial prev = m;
    char g;
    if (m.d > 0) { --prev.d; g = 'Y'; }
    else if (m.c > 0) { --prev.c; g = 'V'; }
    else if (m.b > 0) { --prev.b; g = 'U'; }
    else { --prev.a; g = 'X'; }
    res = times(monomial_coproduct(prev), generator_coproduct(g));
  }
  std::lock_guard<std::mutex> lock(g_coproduct_mutex);
  return g_coproduct_cache.try_emplace(m, std::move(res)).first->second;
}

Tensor2 coproduct(const AlgElem& x) {
  Tensor2 out;
  for (const auto& [m, c] : x.terms())
    for (const auto& [k, p] : monomial_coproduct(m)) out.add_term(k, c * QScalar(p));
  return out;
}

QScalar counit(const AlgElem& x) {
  QScalar out;
  for (const auto& [m, c] : x.terms())
    if (m.b == 0 && m.c == 0) out += c;
  return out;
}

// S(X^a U^b V^c Y^d) = X^d S(V)^c S(U)^b Y^a = (-1)^(b+c) q^(b-c) X^d U^b V^c Y^a
AlgElem antipode(const AlgElem& x) {
  return linear_extend(x, [](const PbwMonomial& m) { return anti_image(m, 2, -2, false); });
}

// S^-1(U) = -q^-1 U, S^-1(V) = -qV
AlgElem antipode_inv(const AlgElem& x) {
  return linear_extend(x, [](const PbwMonomial& m) { return anti_image(m, -2, 2, false); });
}

// (X^a U^b V^c Y^d)* = X^d (V*)^c (U*)^b Y^a = (-1)^(b+c) q^(c-b) X^d U^c V^b Y^a
AlgElem star(const AlgElem& x) {
  return linear_extend(x, [](const PbwMonomial& m) { return anti_image(m, -2, 2, true); });
}

Tensor3 coproduct_left(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [kk, p] : monomial_coproduct(k[0])) out.add_term({kk[0], kk[1], k[1]}, c * QScalar(p));
  return out;
}

Tensor3 coproduct_right(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [kk, p] : monomial_coproduct(k[1])) out.add_term({k[0], kk[0], kk[1]}, c * QScalar(p));
  return out;
}

AlgElem counit_left(const Tensor2& t) {
  AlgElem out;
  for (const auto& [k, c] : t.terms())
    if (k[0].b == 0 && k[0].c == 0) out.add_term(k[1], c);
  return out;
}

AlgElem counit_right(const Tensor2& t) {
  AlgElem out;
  for (const auto& [k, c] : t.terms())
    if (k[1].b == 0 && k[1].c == 0) out.add_term(k[0], c);
  return out;
}

Tensor2 antipode_left(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) {
    const AlgElem image = antipode(AlgElem::monomial(k[0]));
    for (const auto& [m, s] : image.terms()) out.add_term({m, k[1]}, c * s);
  }
  return out;
}

Tensor2 antipode_right(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) {
    const AlgElem image = antipode(AlgElem::monomial(k[1]));
    for (const auto& [m, s] : image.terms()) out.add_term({k[0], m}, c * s);
  }
  return out;
}

}  // namespace qito
