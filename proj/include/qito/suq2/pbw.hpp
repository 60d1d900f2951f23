#pragma once

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qito/scalar/qscalar.hpp"

namespace qito {

// X^a U^b V^c Y^d with a = 0 or d = 0.
struct PbwMonomial {
  int a = 0, b = 0, c = 0, d = 0;

  int degree() const { return a + b + c + d; }
  bool is_one() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool valid() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0 && (a == 0 || d == 0); }

  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
  /// Degree first, then (a, b, c, d) lexicographically.
  friend std::strong_ordering operator<=>(const PbwMonomial& x, const PbwMonomial& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    if (auto c = x.c <=> y.c; c != 0) return c;
    return x.d <=> y.d;
  }
};

/// Integer-Laurent-coefficient combination of monomials; the memoized shape of
/// structural products.
using MonomialCombination = std::vector<std::pair<PbwMonomial, LaurentPoly>>;

/// Normal form of the product of two normal monomials (memoized, thread safe).
const MonomialCombination& monomial_product(const PbwMonomial& x, const PbwMonomial& y);

/// Element of O(SU_q(2)) in the PBW basis.
class AlgElem {
 public:
  using Terms = std::map<PbwMonomial, QScalar>;

  AlgElem() = default;
  AlgElem(const QScalar& s);  // NOLINT
  AlgElem(int c) : AlgElem(QScalar(c)) {}  // NOLINT
  static AlgElem monomial(const PbwMonomial& m, const QScalar& coeff = QScalar(1));
  /// One of 'X', 'U', 'V', 'Y'.
  static AlgElem generator(char g);
  static AlgElem from_combination(const MonomialCombination& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QScalar coeff(const PbwMonomial& m) const;
  int degree() const;

  void add_term(const PbwMonomial& m, const QScalar& c);

  AlgElem operator-() const;
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const QScalar& s);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const QScalar& s) { return a *= s; }
  friend AlgElem operator*(const QScalar& s, AlgElem a) { return a *= s; }
  /// Algebra product, normal-formed.
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);

  friend bool operator==(const AlgElem& x, const AlgElem& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const AlgElem& x, const AlgElem& y) { return !(x == y); }

 private:
  Terms terms_;
};

AlgElem multiply(const AlgElem& x, const AlgElem& y);

/// Element of A^{(x)N}: QScalar combination of N-tuples of PBW monomials.
template <std::size_t N>
class TensorN {
 public:
  using Key = std::array<PbwMonomial, N>;
  using Terms = std::map<Key, QScalar>;

  TensorN() = default;
  static TensorN pure(const Key& k, const QScalar& c = QScalar(1)) {
    TensorN t;
    t.add_term(k, c);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorN& operator+=(const TensorN& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorN& operator-=(const TensorN& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  TensorN& operator*=(const QScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend TensorN operator+(TensorN a, const TensorN& b) { return a += b; }
  friend TensorN operator-(TensorN a, const TensorN& b) { return a -= b; }
  friend TensorN operator*(TensorN a, const QScalar& s) { return a *= s; }

  /// Componentwise product (x1 (x) ... )(y1 (x) ...) = x1 y1 (x) ...
  friend TensorN operator*(const TensorN& x, const TensorN& y) {
    TensorN out;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_) {
        const QScalar c = cx * cy;
        accumulate_product(out, kx, ky, 0, Key{}, LaurentPoly(1), c);
      }
    return out;
  }

  friend bool operator==(const TensorN& x, const TensorN& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const TensorN& x, const TensorN& y) { return !(x == y); }

 private:
  static void accumulate_product(TensorN& out, const Key& kx, const Key& ky, std::size_t leg, Key acc,
                                 const LaurentPoly& coeff, const QScalar& scale) {
    if (leg == N) {
      out.add_term(acc, scale * QScalar(coeff));
      return;
    }
    for (const auto& [m, p] : monomial_product(kx[leg], ky[leg])) {
      acc[leg] = m;
      accumulate_product(out, kx, ky, leg + 1, acc, coeff * p, scale);
    }
  }

  Terms terms_;
};

using Tensor2 = TensorN<2>;
using Tensor3 = TensorN<3>;

/// x (x) y.
Tensor2 outer(const AlgElem& x, const AlgElem& y);
/// M: x (x) y -> x y.
AlgElem mult(const Tensor2& t);
/// sigma: x (x) y -> y (x) x.
Tensor2 flip(const Tensor2& t);

}  // namespace qito
