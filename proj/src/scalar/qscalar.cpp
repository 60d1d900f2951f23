#include "qito/scalar/qscalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qito/errors.hpp"

namespace qito {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct RadicandProduct {
  LaurentPoly outside;
  LaurentPoly radicand;
};

// Pieces of a canonical radicand: t^eps * content * P with P(0) != 0.
struct RadicandParts {
  int eps;
  Integer content;
  LaurentPoly poly;
};

RadicandParts parts_of(const LaurentPoly& r) {
  RadicandParts out{r.low(), Integer(1), r.normalized_low()};
  auto [c, prim] = primitive_split(out.poly);
  out.content = c.get_num();
  out.poly = std::move(prim);
  return out;
}

RadicandProduct multiply_radicands_uncached(const LaurentPoly& r1, const LaurentPoly& r2) {
  RadicandParts a = parts_of(r1);
  RadicandParts b = parts_of(r2);
  LaurentPoly outside(1);
  int eps = a.eps + b.eps;
  if (eps == 2) {
    outside = outside.shifted(1);
    eps = 0;
  }
  Integer d;
  mpz_gcd(d.get_mpz_t(), a.content.get_mpz_t(), b.content.get_mpz_t());
  Integer content = (a.content / d) * (b.content / d);
  outside *= Rational(d);
  LaurentPoly poly;
  LaurentPoly g = poly_gcd(a.poly, b.poly);
  if (g.is_one()) {
    poly = a.poly * b.poly;
  } else {
    LaurentPoly gp = primitive_split(g).second;
    poly = exact_div(a.poly, gp) * exact_div(b.poly, gp);
    outside *= gp;
  }
  return {outside, (poly * Rational(content)).shifted(eps)};
}

std::mutex g_radicand_mutex;
std::map<std::pair<LaurentPoly, LaurentPoly>, RadicandProduct,
         bool (*)(const std::pair<LaurentPoly, LaurentPoly>&, const std::pair<LaurentPoly, LaurentPoly>&)>
    g_radicand_cache([](const auto& x, const auto& y) {
      const int c = compare(x.first, y.first);
      if (c != 0) return c < 0;
      return compare(x.second, y.second) < 0;
    });

RadicandProduct multiply_radicands(const LaurentPoly& r1, const LaurentPoly& r2) {
  if (r1.is_one()) return {LaurentPoly(1), r2};
  if (r2.is_one()) return {LaurentPoly(1), r1};
  auto key = compare(r1, r2) <= 0 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
  {
    std::lock_guard<std::mutex> lock(g_radicand_mutex);
    auto it = g_radicand_cache.find(key);
    if (it != g_radicand_cache.end()) return it->second;
  }
  RadicandProduct res = multiply_radicands_uncached(key.first, key.second);
  std::lock_guard<std::mutex> lock(g_radicand_mutex);
  g_radicand_cache.emplace(std::move(key), res);
  return res;
}

void insert_term(std::vector<RadicalTerm>& terms, RationalFn coeff, const LaurentPoly& radicand) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), radicand,
                             [](const RadicalTerm& t, const LaurentPoly& r) { return compare(t.radicand, r) < 0; });
  if (it != terms.end() && it->radicand == radicand) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, RadicalTerm{std::move(coeff), radicand});
  }
}

bool is_canonical_radicand(const LaurentPoly& r) {
  if (r.is_zero() || r.low() < 0 || r.low() > 1) return false;
  auto split = split_radical(r);
  return split.radicand == r;
}

}  // namespace

std::pair<Integer, Integer> split_square_integer(const Integer& n_in) {
  if (sgn(n_in) <= 0) throw DomainError("split_square_integer expects a positive integer");
  Integer n = n_in, root(1), free(1);
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {root, Integer(1)};
  }
  constexpr unsigned long kTrialBound = 1000000UL;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
    } else {
      free *= n;
    }
  }
  return {root, free};
}

RadicalSplit split_radical(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("square root split of zero");
  auto [c, prim] = primitive_split(p);
  if (sgn(c) < 0) throw DomainError("radicand has negative leading coefficient");
  const int e = prim.low();
  const int half = floor_div(e, 2);
  LaurentPoly outside = LaurentPoly::t_power(half);
  const int eps = e - 2 * half;
  // sqrt(a/b) = sqrt(a*b)/b.
  auto [root, free] = split_square_integer(c.get_num() * c.get_den());
  Rational root_over_den(root, c.get_den());
  root_over_den.canonicalize();
  outside *= root_over_den;
  LaurentPoly radicand{Rational(free)};
  const LaurentPoly p0 = prim.normalized_low();
  if (!p0.is_constant()) {
    const auto factors = square_free_decomposition(p0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int mult = static_cast<int>(i) + 1;
      if (factors[i].is_constant()) continue;
      LaurentPoly g = primitive_split(factors[i]).second;
      for (int k = 0; k < mult / 2; ++k) outside *= g;
      if (mult % 2 == 1) radicand *= g;
    }
  }
  return {outside, radicand.shifted(eps)};
}

bool positive_above_one(const LaurentPoly& p) {
  if (p.is_zero() || sgn(p.leading()) <= 0) return false;
  return descartes_bound_above_one(p) == 0;
}

QScalar::QScalar(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back(RadicalTerm{RationalFn(c), LaurentPoly(1)});
}

QScalar::QScalar(const RationalFn& f) {
  if (!f.is_zero()) terms_.push_back(RadicalTerm{f, LaurentPoly(1)});
}

QScalar QScalar::radical(const RationalFn& coeff, const LaurentPoly& radicand) {
  if (coeff.is_zero()) return {};
  if (!positive_above_one(radicand))
    throw DomainError("radicand is not certifiably positive for q > 1");
  auto split = split_radical(radicand);
  QScalar out;
  out.terms_.push_back(RadicalTerm{coeff * RationalFn(split.outside), split.radicand});
  return out;
}

QScalar QScalar::q_quarter_power(int k) {
  const int half = floor_div(k, 2);
  QScalar out;
  out.terms_.push_back(RadicalTerm{RationalFn(LaurentPoly::t_power(half)),
                                   LaurentPoly::t_power(k - 2 * half)});
  return out;
}

QScalar QScalar::from_terms(std::vector<RadicalTerm> terms) {
  QScalar out;
  for (auto& t : terms) {
    if (!is_canonical_radicand(t.radicand)) throw ParseError("radicand is not in canonical form");
    if (!positive_above_one(t.radicand)) throw ParseError("radicand is not positive for q > 1");
    insert_term(out.terms_, std::move(t.coeff), t.radicand);
  }
  return out;
}

RationalFn QScalar::as_rational() const {
  if (terms_.empty()) return {};
  if (!is_rational()) throw UnsupportedError("scalar carries a radical");
  return terms_[0].coeff;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<RadicalTerm> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = 1;
    else if (j == o.terms_.size()) c = -1;
    else c = compare(terms_[i].radicand, o.terms_[j].radicand);
    if (c < 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c > 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      RationalFn s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) merged.push_back(RadicalTerm{std::move(s), terms_[i].radicand});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_rational() && b.terms_.size() == 1) {
    out.terms_.push_back(RadicalTerm{a.terms_[0].coeff * b.terms_[0].coeff, b.terms_[0].radicand});
    if (out.terms_[0].coeff.is_zero()) out.terms_.clear();
    return out;
  }
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto prod = multiply_radicands(x.radicand, y.radicand);
      RationalFn c = x.coeff * y.coeff;
      if (!prod.outside.is_one()) c *= RationalFn(prod.outside);
      insert_term(out.terms_, std::move(c), prod.radicand);
    }
  }
  return out;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.terms_.size() != 1) throw UnsupportedError("division by a sum of distinct radicals is not supported");
  const auto& t = o.terms_[0];
  // (r sqrt(s))^-1 = sqrt(s) / (r s)
  QScalar inv;
  inv.terms_.push_back(RadicalTerm{(t.coeff * RationalFn(t.radicand)).inverse(), t.radicand});
  return *this = *this * inv;
}

QScalar QScalar::scaled(const RationalFn& f) const {
  if (f.is_zero()) return {};
  QScalar r = *this;
  for (auto& t : r.terms_) t.coeff *= f;
  return r;
}

int compare(const QScalar& a, const QScalar& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = compare(x[i].radicand, y[i].radicand);
    if (c != 0) return c;
    c = compare(x[i].coeff, y[i].coeff);
    if (c != 0) return c;
  }
  return 0;
}

QScalar sqrt(const QScalar& a) {
  if (a.is_zero()) return {};
  if (!a.is_rational()) throw UnsupportedError("sqrt of a radical expression is not supported");
  const RationalFn& f = a.terms()[0].coeff;
  const LaurentPoly p = f.num() * f.den();
  if (!positive_above_one(p))
    throw DomainError("sqrt argument is not certifiably positive for q > 1");
  auto split = split_radical(p);
  // sqrt(N/D) = sqrt(N D) / D, with the sign chosen so the value is positive.
  RationalFn coeff(split.outside, f.den());
  if (sgn(coeff.num().leading()) < 0) coeff = -coeff;
  return QScalar::from_terms({RadicalTerm{coeff, split.radicand}});
}

QScalar q_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -q_int(-n);
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p += LaurentPoly::t_power(2 * (n - 1 - 2 * k));
  return QScalar(p);
}

QScalar q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial of a negative integer");
  static std::mutex mutex;
  static std::vector<QScalar> cache{QScalar(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const int k = static_cast<int>(cache.size());
    cache.push_back(cache.back() * q_int(k));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace qito
