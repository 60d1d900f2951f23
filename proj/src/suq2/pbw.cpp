#include "qito/suq2/pbw.hpp"

#include <mutex>

#include "qito/errors.hpp"

namespace qito {

namespace {

using Combination = std::map<PbwMonomial, LaurentPoly>;

void accumulate(Combination& out, const PbwMonomial& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// m * g for a single generator g, with q = t^2:
//   UX = qXU, VX = qXV, YU = qUY, YV = qVY, UV = VU,
//   XY = 1 + q^-1 UV, YX = 1 + q UV.
void times_generator(Combination& out, const PbwMonomial& m, const LaurentPoly& c, char g) {
  PbwMonomial r = m;
  switch (g) {
    case 'U':
      ++r.b;
      accumulate(out, r, c.shifted(2 * m.d));
      return;
    case 'V':
      ++r.c;
      accumulate(out, r, c.shifted(2 * m.d));
      return;
    case 'X':
      if (m.d == 0) {
        ++r.a;
        accumulate(out, r, c.shifted(2 * (m.b + m.c)));
      } else {
        // Y^d X = Y^(d-1) + q^(2d-1) UV Y^(d-1)
        --r.d;
        accumulate(out, r, c);
        ++r.b;
        ++r.c;
        accumulate(out, r, c.shifted(2 * (2 * m.d - 1)));
      }
      return;
    case 'Y':
      if (m.a == 0) {
        ++r.d;
        accumulate(out, r, c);
      } else {
        // X^a W Y = q^-(b+c) X^(a-1) (1 + q^-1 UV) W
        const LaurentPoly base = c.shifted(-2 * (m.b + m.c));
        --r.a;
        accumulate(out, r, base);
        ++r.b;
        ++r.c;
        accumulate(out, r, base.shifted(-2));
      }
      return;
    default:
      throw DomainError(std::string("unknown generator '") + g + "'");
  }
}

Combination times_word(Combination in, const PbwMonomial& w) {
  auto apply = [&](char g, int times) {
    for (int i = 0; i < times; ++i) {
      Combination next;
      for (const auto& [m, c] : in) times_generator(next, m, c, g);
      in = std::move(next);
    }
  };
  apply('X', w.a);
  apply('U', w.b);
  apply('V', w.c);
  apply('Y', w.d);
  return in;
}

struct PairLess {
  bool operator()(const std::pair<PbwMonomial, PbwMonomial>& x, const std::pair<PbwMonomial, PbwMonomial>& y) const {
    if (auto c = x.first <=> y.first; c != 0) return c < 0;
    return (x.second <=> y.second) < 0;
  }
};

std::mutex g_product_mutex;
std::map<std::pair<PbwMonomial, PbwMonomial>, MonomialCombination, PairLess> g_product_cache;

}  // namespace

const MonomialCombination& monomial_product(const PbwMonomial& x, const PbwMonomial& y) {
  const auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(g_product_mutex);
    auto it = g_product_cache.find(key);
    if (it != g_product_cache.end()) return it->second;
  }
  Combination start;
  start.emplace(x, LaurentPoly(1));
  Combination res = times_word(std::move(start), y);
  MonomialCombination flat(res.begin(), res.end());
  std::lock_guard<std::mutex> lock(g_product_mutex);
  // std::map never invalidates references, so handing out a reference is safe.
  return g_product_cache.try_emplace(key, std::move(flat)).first->second;
}

AlgElem::AlgElem(const QScalar& s) {
  if (!s.is_zero()) terms_.emplace(PbwMonomial{}, s);
}

AlgElem AlgElem::monomial(const PbwMonomial& m, const QScalar& coeff) {
  if (!m.valid()) throw DomainError("monomial is not in PBW normal form");
  AlgElem e;
  e.add_term(m, coeff);
  return e;
}

AlgElem AlgElem::generator(char g) {
  switch (g) {
    case 'X': return monomial({1, 0, 0, 0});
    case 'U': return monomial({0, 1, 0, 0});
    case 'V': return monomial({0, 0, 1, 0});
    case 'Y': return monomial({0, 0, 0, 1});
    default: throw DomainError(std::string("unknown generator '") + g + "'");
  }
}

AlgElem AlgElem::from_combination(const MonomialCombination& c) {
  AlgElem e;
  for (const auto& [m, p] : c) e.add_term(m, QScalar(p));
  return e;
}

QScalar AlgElem::coeff(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

int AlgElem::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void AlgElem::add_term(const PbwMonomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const QScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  AlgElem out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      const QScalar c = cx * cy;
      for (const auto& [m, p] : monomial_product(mx, my)) out.add_term(m, c * QScalar(p));
    }
  return out;
}

AlgElem multiply(const AlgElem& x, const AlgElem& y) { return x * y; }

Tensor2 outer(const AlgElem& x, const AlgElem& y) {
  Tensor2 t;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add_term({mx, my}, cx * cy);
  return t;
}

AlgElem mult(const Tensor2& t) {
  AlgElem out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, p] : monomial_product(k[0], k[1])) out.add_term(m, c * QScalar(p));
  return out;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

}  // namespace qito
