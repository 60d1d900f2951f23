#pragma once

#include "qito/scalar/laurent_poly.hpp"

namespace qito {

// Quotient of Laurent polynomials in t, kept reduced. The denominator is monic
// with lowest exponent zero; powers of t live in the numerator.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFn(long c) : RationalFn(Rational(c)) {}       // NOLINT
  RationalFn(int c) : RationalFn(Rational(c)) {}        // NOLINT
  RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  RationalFn operator-() const;
  RationalFn inverse() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o) { return *this += -o; }
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o) { return *this *= o.inverse(); }

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  /// Substitute t -> 1/t.
  RationalFn inverted_variable() const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

 private:
  struct Reduced {};
  RationalFn(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

int compare(const RationalFn& a, const RationalFn& b);

}  // namespace qito
