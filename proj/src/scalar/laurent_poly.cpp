#include "qito/scalar/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qito {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  for (auto& c : p.coeffs_) c.canonicalize();
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return {};
  std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_dense(-high(), std::move(rev));
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for_each_term([&](int e, const Rational& c) {
    if (e != 0) r += monomial(c * e, e - 1);
  });
  return r;
}

Rational LaurentPoly::eval(const Rational& t) const {
  if (is_zero()) return Rational(0);
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  if (low_ != 0) {
    if (sgn(t) == 0) throw std::domain_error("negative power of t evaluated at zero");
    Rational p(1);
    const Rational base = low_ > 0 ? t : Rational(1) / t;
    for (int i = 0; i < std::abs(low_); ++i) p *= base;
    acc *= p;
  }
  return acc;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r(1);
  const Rational b = e >= 0 ? base : Rational(1) / base;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

int floor_div2(int e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

}  // namespace

std::pair<Rational, Rational> LaurentPoly::eval_at_sqrt(const Rational& q) const {
  Rational a(0), b(0);
  for_each_term([&](int e, const Rational& c) {
    const int half = floor_div2(e);
    const Rational qp = rational_pow(q, half);
    if (e - 2 * half == 0)
      a += c * qp;
    else
      b += c * qp;
  });
  return {a, b};
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_) ^ (coeffs_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& c : coeffs_) {
    const std::size_t hn = mpz_get_ui(c.get_num_mpz_t()) * 31 + mpz_get_ui(c.get_den_mpz_t());
    h ^= hn + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
  const auto& ca = a.dense();
  const auto& cb = b.dense();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  if (ca.empty()) return 0;
  if (a.low() != b.low()) return a.low() < b.low() ? -1 : 1;
  for (std::size_t i = ca.size(); i-- > 0;) {
    const int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.low() < 0 || b.low() < 0) throw std::domain_error("poly_divmod expects ordinary polynomials");
  // Work on dense arrays indexed from t^0.
  const int db = b.high();
  std::vector<Rational> rem(static_cast<std::size_t>(a.high() + 1));
  for (int e = a.low(); e <= a.high(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  std::vector<Rational> bd(static_cast<std::size_t>(db + 1));
  for (int e = b.low(); e <= db; ++e) bd[static_cast<std::size_t>(e)] = b.coeff(e);
  const Rational inv_lead = Rational(1) / b.leading();
  const int da = a.high();
  if (da < db) return {LaurentPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  Rational tmp;
  for (int k = da - db; k >= 0; --k) {
    Rational& top = rem[static_cast<std::size_t>(k + db)];
    if (sgn(top) == 0) continue;
    const Rational f = top * inv_lead;
    quo[static_cast<std::size_t>(k)] = f;
    for (int i = b.low(); i <= db; ++i) {
      if (sgn(bd[static_cast<std::size_t>(i)]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bd[static_cast<std::size_t>(i)].get_mpq_t());
      rem[static_cast<std::size_t>(k + i)] -= tmp;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {LaurentPoly::from_dense(0, std::move(quo)), LaurentPoly::from_dense(0, std::move(rem))};
}

namespace {

LaurentPoly make_monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.normalized_low();
  LaurentPoly y = b.normalized_low();
  if (x.is_zero()) return make_monic(y);
  if (y.is_zero()) return make_monic(x);
  if (x.is_constant() || y.is_constant()) return LaurentPoly(1);
  if (x.high() < y.high()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second.normalized_low();
    x = std::move(y);
    y = make_monic(r);
    if (y.is_constant() && !y.is_zero()) return LaurentPoly(1);
  }
  return make_monic(x);
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(-b.low()) * (Rational(1) / b.leading());
  const LaurentPoly a0 = a.normalized_low();
  const LaurentPoly b0 = b.normalized_low();
  auto [q, r] = poly_divmod(a0, b0);
  if (!r.is_zero()) throw std::logic_error("exact_div: divisor does not divide dividend");
  return q.shifted(a.low() - b.low());
}

std::pair<Rational, LaurentPoly> primitive_split(const LaurentPoly& p) {
  if (p.is_zero()) return {Rational(0), p};
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : p.dense()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading()) < 0) content = -content;
  return {content, p * (Rational(1) / content)};
}

std::vector<LaurentPoly> square_free_decomposition(const LaurentPoly& p) {
  // Yun's algorithm over Q.
  std::vector<LaurentPoly> out;
  LaurentPoly f = make_monic(p.normalized_low());
  if (f.is_constant()) return out;
  LaurentPoly fp = f.derivative();
  LaurentPoly a = poly_gcd(f, fp);
  LaurentPoly b = exact_div(f, a);
  LaurentPoly c = exact_div(fp, a);
  LaurentPoly d = c - b.derivative();
  while (!b.is_constant()) {
    LaurentPoly g = poly_gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

int descartes_bound_above_one(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  const LaurentPoly f = p.normalized_low();
  // Taylor shift t -> t + 1 via repeated synthetic division.
  std::vector<Rational> c(f.dense());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  int changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace qito
