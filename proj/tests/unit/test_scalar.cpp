#include <random>

#include "doctest.h"
#include "qito/errors.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/scalar/text.hpp"
#include "../support/printers.hpp"
#include "../support/random_scalars.hpp"

using namespace qito;

namespace {
QScalar Q(const char* s) { return parse_qscalar(s); }
}  // namespace

TEST_CASE("q integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QScalar(1));
  CHECK(q_int(2) == Q("q+q^-1"));
  CHECK(q_int(3) == Q("q^2+1+q^-2"));
  CHECK(q_int(-3) == -q_int(3));
  for (int n = 0; n < 8; ++n) {
    const LaurentPoly p = q_int(n).is_zero() ? LaurentPoly() : q_int(n).as_rational().num();
    CHECK(p == p.inverted_variable());
  }
}

TEST_CASE("q factorials") {
  CHECK(q_factorial(0) == QScalar(1));
  CHECK(q_factorial(2) == Q("q+q^-1"));
  CHECK(q_factorial(3) == Q("(q^2+1+q^-2)*(q+q^-1)"));
  CHECK_THROWS_AS(q_factorial(-1), DomainError);
}

TEST_CASE("add, mul and div") {
  const QScalar r2 = sqrt(q_int(2));
  CHECK((r2 + -r2).is_zero());
  CHECK(r2 * r2 == q_int(2));
  CHECK(Q("q^(1/2)") * Q("q^(1/2)") == Q("q"));
  CHECK(QScalar(1) / q_int(2) == Q("1/(q+q^-1)"));
  CHECK(r2 / r2 == QScalar(1));
  CHECK_THROWS_AS(QScalar(1) / QScalar(0), DomainError);
  CHECK_THROWS_AS(QScalar(1) / (r2 + QScalar(1)), UnsupportedError);
  // q^(3/4) = q^(1/2) sqrt(q^(1/2))
  CHECK(Q("q^(1/4)") * Q("q^(1/4)") * Q("q^(1/4)") == Q("q^(3/4)"));
  CHECK(Q("q^(1/4)") * Q("q^(-1/4)") == QScalar(1));
}

TEST_CASE("sqrt") {
  CHECK(sqrt(Q("q^2")) == Q("q"));
  CHECK(sqrt(q_int(2) * q_int(2)) == q_int(2));
  CHECK(to_text(sqrt(q_int(2))) == "sqrt(q+q^-1)");
  CHECK(sqrt(Q("4/9")) == Q("2/3"));
  CHECK(sqrt(Q("8")) == Q("2*sqrt(2)"));
  CHECK(sqrt(Q("1/(q+q^-1)")) * sqrt(Q("1/(q+q^-1)")) == Q("1/(q+q^-1)"));
  CHECK_THROWS_AS(sqrt(QScalar(-1)), DomainError);
  CHECK_THROWS_AS(sqrt(sqrt(q_int(2))), UnsupportedError);
  // sqrt(q - 3) is negative just above q = 1.
  CHECK_THROWS_AS(sqrt(Q("q-3")), DomainError);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    QScalar a = QScalar(1);
    for (int k = 0; k < 3; ++k) a *= q_factorial(static_cast<int>(rng() % 5));
    a /= q_int(1 + static_cast<int>(rng() % 4));
    const QScalar s = sqrt(a);
    CHECK(s * s == a);
  }
}

TEST_CASE("numeric evaluation") {
  CHECK(eval_numeric(q_int(2), Rational(2)).to_string(10) == "2.5");
  const Real v = eval_numeric(sqrt(q_int(2)), Rational(2));
  CHECK(numerically_close(v, sqrt(Real(Rational(5, 2), 256)), 28));
  CHECK(eval_numeric(QScalar(), Rational(3)).sign() == 0);
  CHECK_THROWS_AS(eval_numeric(Q("1/(q-1)"), Rational(1)), PoleError);
  // q = 4 is a square, so t is rational.
  CHECK(eval_numeric(Q("q^(1/2)"), Rational(4)).to_string(5) == "2");
  CHECK(numerically_close(eval_numeric(Q("q^(1/4)"), Rational(16)), Real(Rational(2), 256), 28));
}

TEST_CASE("text round trip and canonical idempotence") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const QScalar x = testing::random_qscalar(rng);
    CHECK(parse_qscalar(to_text(x)) == x);
    CHECK(qscalar_from_json(to_json(x)) == x);
    CHECK(QScalar::from_terms(x.terms()) == x);
  }
  CHECK(to_text(Q("q^(1/2)*sqrt(q+q^-1)")) == "q^(1/2)*sqrt(q+q^-1)");
  CHECK_THROWS_AS(parse_qscalar("q+"), ParseError);
  CHECK_THROWS_AS(parse_qscalar("X"), ParseError);
}

TEST_CASE("ring laws") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const QScalar a = testing::random_qscalar(rng);
    const QScalar b = testing::random_qscalar(rng);
    const QScalar c = testing::random_qscalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("numeric homomorphism") {
  std::mt19937 rng(99);
  for (const Rational q : {Rational(3, 2), Rational(2), Rational(5)}) {
    for (int i = 0; i < 20; ++i) {
      const QScalar a = testing::random_qscalar(rng);
      const QScalar b = testing::random_qscalar(rng);
      const Real ea = eval_numeric(a, q), eb = eval_numeric(b, q);
      CHECK(numerically_close(eval_numeric(a * b, q), ea * eb, 28));
      CHECK(numerically_close(eval_numeric(a + b, q), ea + eb, 28));
    }
  }
}

TEST_CASE("integer square split") {
  auto [r, f] = split_square_integer(Integer(72));
  CHECK(r == 6);
  CHECK(f == 2);
  auto [r2, f2] = split_square_integer(Integer("1000003") * Integer("1000003") * 5);
  CHECK(r2 == Integer("1000003"));
  CHECK(f2 == 5);
}
