#pragma once

#include <string>
#include <vector>

#include "qito/scalar/rational_fn.hpp"

namespace qito {

// One term coeff * sqrt(radicand).
//
// Canonical radicands are integer polynomials in t that are square-free, have
// square-free positive integer content and positive leading coefficient, and
// lowest exponent 0 or 1. The radicand 1 marks a purely rational term.
struct RadicalTerm {
  RationalFn coeff;
  LaurentPoly radicand;

  friend bool operator==(const RadicalTerm& a, const RadicalTerm& b) {
    return a.radicand == b.radicand && a.coeff == b.coeff;
  }
};

class QScalar {
 public:
  QScalar() = default;
  QScalar(const Rational& c);  // NOLINT
  QScalar(long c) : QScalar(Rational(c)) {}  // NOLINT
  QScalar(int c) : QScalar(Rational(c)) {}   // NOLINT
  QScalar(const LaurentPoly& p) : QScalar(RationalFn(p)) {}  // NOLINT
  QScalar(const RationalFn& f);  // NOLINT

  /// coeff * sqrt(radicand); the radicand is canonicalized (it must be
  /// positive for q > 1, which is checked).
  static QScalar radical(const RationalFn& coeff, const LaurentPoly& radicand);
  /// q^(k/4), i.e. t^(k/2).
  static QScalar q_quarter_power(int k);
  /// q^(k/2) = t^k.
  static QScalar t_power(int k) { return QScalar(LaurentPoly::t_power(k)); }

  /// Builds from already-canonical terms (sorted, distinct radicands, nonzero
  /// coefficients). Used by the parser and JSON reader after validation.
  static QScalar from_terms(std::vector<RadicalTerm> terms);

  const std::vector<RadicalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand.is_one()); }
  bool is_single_term() const { return terms_.size() == 1; }
  /// Rational part; throws unless is_rational().
  RationalFn as_rational() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o) { return *this += -o; }
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  /// Multiply every coefficient by a rational function (no radical merging).
  QScalar scaled(const RationalFn& f) const;

  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

 private:
  std::vector<RadicalTerm> terms_;  // sorted by radicand
};

int compare(const QScalar& a, const QScalar& b);

/// Principal square root of a single rational term positive for q > 1.
QScalar sqrt(const QScalar& a);

/// Canonical radicand decomposition: p = outside^2 * radicand with radicand
/// canonical. p must be nonzero; the sign of p is absorbed into `sign`.
struct RadicalSplit {
  LaurentPoly outside;
  LaurentPoly radicand;
};
RadicalSplit split_radical(const LaurentPoly& p);

/// n = root^2 * squarefree for n > 0.
std::pair<Integer, Integer> split_square_integer(const Integer& n);

/// Certifies p(t) > 0 for every t > 1 (Descartes after t -> t + 1 plus a
/// positive leading coefficient).
bool positive_above_one(const LaurentPoly& p);

QScalar q_int(int n);
QScalar q_factorial(int n);

}  // namespace qito
