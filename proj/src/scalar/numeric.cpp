#include "qito/scalar/numeric.hpp"

#include <cmath>
#include <vector>

#include "qito/errors.hpp"

namespace qito {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& r, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Real decimal_epsilon(int digits, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), -digits, MPFR_RNDN);
  return r;
}

bool numerically_close(const Real& x, const Real& y, int digits) {
  Real scale = abs(y);
  Real one(Rational(1), y.precision());
  if (scale < one) scale = one;
  return abs(x - y) <= decimal_epsilon(digits, y.precision()) * scale;
}

namespace {

// Exact value of one coefficient/radicand in Q(sqrt q): a + b sqrt(q).
struct QuadValue {
  Rational a, b;
};

QuadValue eval_rational_fn(const RationalFn& f, const Rational& q, bool q_is_square, const Rational& root) {
  if (q_is_square) {
    const Rational d = f.den().eval(root);
    if (sgn(d) == 0) throw PoleError("pole at the requested q");
    return {f.num().eval(root) / d, Rational(0)};
  }
  auto [na, nb] = f.num().eval_at_sqrt(q);
  auto [da, db] = f.den().eval_at_sqrt(q);
  if (sgn(da) == 0 && sgn(db) == 0) throw PoleError("pole at the requested q");
  const Rational norm = da * da - db * db * q;
  return {(na * da - nb * db * q) / norm, (nb * da - na * db) / norm};
}

struct ExactTerm {
  QuadValue coeff;
  QuadValue radicand;
};

Real evaluate_terms(const std::vector<ExactTerm>& terms, const Rational& q, mpfr_prec_t bits) {
  const Real sq = sqrt(Real(q, bits));
  Real sum(bits);
  for (const auto& t : terms) {
    Real c = Real(t.coeff.a, bits) + Real(t.coeff.b, bits) * sq;
    Real r = Real(t.radicand.a, bits) + Real(t.radicand.b, bits) * sq;
    if (r.sign() < 0) throw DomainError("radicand is negative at the requested q");
    sum += c * sqrt(r);
  }
  return sum;
}

}  // namespace

Real eval_numeric(const QScalar& a, const Rational& q, int digits) {
  if (sgn(q) <= 0) throw DomainError("q must be positive");
  if (digits < 1) throw DomainError("precision must be at least one digit");
  if (a.is_zero()) return Real(bits_for_digits(digits));
  const bool q_is_square = mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
  Rational root;
  if (q_is_square) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
  }
  std::vector<ExactTerm> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms())
    terms.push_back({eval_rational_fn(t.coeff, q, q_is_square, root),
                     eval_rational_fn(RationalFn(t.radicand), q, q_is_square, root)});

  mpfr_prec_t bits = bits_for_digits(digits);
  Real prev = evaluate_terms(terms, q, bits);
  for (int round = 0; round < 8; ++round) {
    bits *= 2;
    Real next = evaluate_terms(terms, q, bits);
    if (numerically_close(prev, next, digits)) return next;
    prev = std::move(next);
  }
  throw std::runtime_error("numeric evaluation did not stabilise");
}

}  // namespace qito
