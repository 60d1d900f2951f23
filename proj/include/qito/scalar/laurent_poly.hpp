#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace qito {

using Rational = mpq_class;
using Integer = mpz_class;

// Laurent polynomial in t = q^{1/2} with rational coefficients.
//
// Stored densely: coeffs_[i] is the coefficient of t^(low_ + i). The vector is
// trimmed so that both end coefficients are nonzero; the zero polynomial has an
// empty vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly t_power(int exponent) { return monomial(Rational(1), exponent); }
  /// From a dense coefficient list starting at t^low.
  static LaurentPoly from_dense(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  std::size_t term_count() const;

  // Only meaningful for nonzero polynomials.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }

  Rational coeff(int exponent) const;
  const std::vector<Rational>& dense() const { return coeffs_; }

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) f(low_ + static_cast<int>(i), coeffs_[i]);
  }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// t -> 1/t.
  LaurentPoly inverted_variable() const;
  /// Formal derivative d/dt (used only on polynomials with low() >= 0).
  LaurentPoly derivative() const;
  /// Shift so that the lowest exponent is zero.
  LaurentPoly normalized_low() const { return is_zero() ? *this : shifted(-low_); }

  /// Exact value at a rational point.
  Rational eval(const Rational& t) const;
  /// Exact value at t = sqrt(q): returns (a, b) with value a + b*sqrt(q).
  std::pair<Rational, Rational> eval_at_sqrt(const Rational& q) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Total order used for canonical term ordering: fewer terms first, then lower
/// exponent, then coefficients lexicographically.
int compare(const LaurentPoly& a, const LaurentPoly& b);

struct LaurentPolyLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return compare(a, b) < 0; }
};

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

// --- polynomial algorithms -------------------------------------------------
//
// Monomials t^k are units in the Laurent ring, so gcd and exact division work
// up to a power of t.

/// Long division of ordinary polynomials. Both arguments must have low() >= 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd with lowest exponent zero. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b where b divides a in the Laurent ring; throws if not exact.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Splits p = content * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient.
std::pair<Rational, LaurentPoly> primitive_split(const LaurentPoly& p);

/// Square-free decomposition (Yun) of a polynomial with nonzero constant term:
/// returns monic factors f[0], f[1], ... with p = lc * prod f[i]^(i+1).
std::vector<LaurentPoly> square_free_decomposition(const LaurentPoly& p);

/// Upper bound (Descartes) on the number of roots with t > 1, counted on the
/// polynomial part after dropping powers of t.
int descartes_bound_above_one(const LaurentPoly& p);

}  // namespace qito
