#include <random>

#include "doctest.h"
#include "qito/errors.hpp"
#include "qito/haar/haar.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/suq2/hopf.hpp"
#include "../support/printers.hpp"

using namespace qito;

namespace {
const AlgElem X = AlgElem::generator('X'), U = AlgElem::generator('U'), V = AlgElem::generator('V'),
              Y = AlgElem::generator('Y');

std::vector<PbwMonomial> monomials_up_to(int deg) {
  std::vector<PbwMonomial> out;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c)
        for (int d = 0; a + b + c + d <= deg; ++d)
          if (a == 0 || d == 0) out.push_back({a, b, c, d});
  return out;
}
}  // namespace

TEST_CASE("haar: basis expansion examples") {
  CHECK(to_matrix_coeff_basis(AlgElem(1)) == BasisExpansion{{DKey{0, 0, 0}, QScalar(1)}});
  CHECK(to_matrix_coeff_basis(X) == BasisExpansion{{DKey{1, 1, 1}, QScalar(1)}});
  const QScalar inv2 = QScalar(1) / q_int(2);
  CHECK(to_matrix_coeff_basis(U * V) == BasisExpansion{{DKey{0, 0, 0}, -inv2}, {DKey{2, 0, 0}, inv2}});
  CHECK(haar(AlgElem(1)) == QScalar(1));
  CHECK(haar(X) == QScalar());
  CHECK(haar(U * V) == -inv2);
  CHECK_THROWS_AS(to_matrix_coeff_basis(X * X * X, 2), SpanExceededError);
}

TEST_CASE("haar: reconstruction of every monomial up to degree 4") {
  for (const auto& m : monomials_up_to(4)) {
    const AlgElem x = AlgElem::monomial(m);
    AlgElem back;
    for (const auto& [k, c] : to_matrix_coeff_basis(x)) back += dfun(k.j, k.mp, k.m) * c;
    CHECK(back == x);
  }
}

TEST_CASE("haar: orthogonality on matrix coefficients") {
  for (int j = 0; j <= 3; ++j)
    for (int a = j; a >= -j; a -= 2)
      for (int b = j; b >= -j; b -= 2) CHECK(haar(dfun(j, a, b)) == QScalar(j == 0 ? 1 : 0));
}

TEST_CASE("haar: two-sided invariance on monomials of degree <= 4") {
  for (const auto& m : monomials_up_to(4)) {
    const AlgElem x = AlgElem::monomial(m);
    const Tensor2 d = coproduct(x);
    const AlgElem expected(haar(x));
    CHECK(haar_left(d) == expected);
    CHECK(haar_right(d) == expected);
  }
}

TEST_CASE("haar: triple-product formula against direct evaluation") {
  CHECK(haar_triple(0, 0, 0, 0, 0, 0, 0, 0, 0) == QScalar(1));
  CHECK(haar_triple(2, 0, 0, 1, 1, 1, 0, 0, 0) == QScalar());
  int count = 0;
  for (int r = 0; r <= 2; ++r)
    for (int q = 0; q <= 2; ++q)
      for (int p = 0; p <= 2; ++p)
        for (int u = r; u >= -r; u -= 2)
          for (int l = r; l >= -r; l -= 2) {
            const AlgElem rs = star(dfun(r, u, l));
            for (int t = q; t >= -q; t -= 2)
              for (int k = q; k >= -q; k -= 2) {
                const AlgElem rq = rs * dfun(q, t, k);
                for (int s = p; s >= -p; s -= 2)
                  for (int j = p; j >= -p; j -= 2) {
                    CHECK(haar(rq * dfun(p, s, j)) == haar_triple(r, u, l, q, t, k, p, s, j));
                    ++count;
                  }
              }
          }
  CHECK(count == 2744);
}

TEST_CASE("haar: positivity spot check") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto monos = monomials_up_to(2);
  for (int trial = 0; trial < 40; ++trial) {
    AlgElem x;
    for (const auto& m : monos) x.add_term(m, QScalar(coef(rng)));
    if (x.is_zero()) continue;
    const Real v = eval_numeric(haar(star(x) * x), Rational(3, 2), 30);
    CHECK(v.sign() > 0);
  }
}
