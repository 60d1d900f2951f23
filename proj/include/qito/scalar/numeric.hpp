#pragma once

#include <mpfr.h>

#include <string>

#include "qito/scalar/qscalar.hpp"

namespace qito {

// Owning MPFR value. Every operation takes its precision from the left
// operand, so values built at different precisions never mix silently.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(const Rational& r, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

/// Binary precision used for `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

/// 10^(-digits) at the given precision.
Real decimal_epsilon(int digits, mpfr_prec_t bits);

/// Value of `a` at a positive rational q, accurate to `digits` significant
/// digits (or absolutely when the value is below 1). Rational coefficients are
/// evaluated exactly in Q(sqrt q), so a pole is detected exactly and reported
/// as PoleError. Square roots are computed at two working precisions that must
/// agree.
Real eval_numeric(const QScalar& a, const Rational& q, int digits = 30);

/// |x - y| <= 10^(-digits) * max(1, |y|).
bool numerically_close(const Real& x, const Real& y, int digits);

}  // namespace qito
