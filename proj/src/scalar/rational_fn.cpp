#include "qito/scalar/rational_fn.hpp"

#include "qito/errors.hpp"

namespace qito {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.normalized_low();
  }
  if (den_.leading() != 1) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Reduced{}); }

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  return RationalFn(den_, num_);
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g)).
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly d_over_g = exact_div(o.den_, g);
  LaurentPoly b_over_g = exact_div(den_, g);
  num_ = num_ * d_over_g + o.num_ * b_over_g;
  den_ = den_ * d_over_g;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFn();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees down.
  LaurentPoly g1 = o.den_.is_one() ? LaurentPoly(1) : poly_gcd(num_, o.den_);
  LaurentPoly g2 = den_.is_one() ? LaurentPoly(1) : poly_gcd(o.num_, den_);
  LaurentPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  LaurentPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.normalized_low();
  }
  if (den_.leading() != 1) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RationalFn RationalFn::inverted_variable() const {
  return RationalFn(num_.inverted_variable(), den_.inverted_variable());
}

int compare(const RationalFn& a, const RationalFn& b) {
  const int c = compare(a.den(), b.den());
  if (c != 0) return c;
  return compare(a.num(), b.num());
}

}  // namespace qito
