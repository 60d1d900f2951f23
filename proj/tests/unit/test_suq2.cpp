#include <random>

#include "doctest.h"
#include "qito/errors.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/suq2/hopf.hpp"
#include "qito/suq2/rewrite.hpp"
#include "qito/suq2/text.hpp"
#include "../support/golden.hpp"
#include "../support/printers.hpp"

using namespace qito;

namespace {
AlgElem A(const char* s) { return parse_alg_elem(s); }
const AlgElem X = AlgElem::generator('X'), U = AlgElem::generator('U'), V = AlgElem::generator('V'),
              Y = AlgElem::generator('Y');
}  // namespace

TEST_CASE("normal form by rewriting") {
  CHECK(normal_form("UX") == A("q*X*U"));
  CHECK(normal_form("YX") == A("1+q*U*V"));
  CHECK(normal_form("XYV") == A("V+q^-1*U*V^2"));
  CHECK(normal_form("XUY") == normal_form("XUY", QScalar(1), RewriteStrategy::Rightmost));
}

TEST_CASE("multiplication") {
  CHECK(X * Y == A("1+q^-1*U*V"));
  CHECK(X * U == AlgElem::monomial({1, 1, 0, 0}));
  CHECK(Y * X == A("1+q*U*V"));
}

TEST_CASE("rewrite confluence agrees with the product table") {
  std::mt19937 rng(5);
  const char gens[] = {'X', 'U', 'V', 'Y'};
  for (int i = 0; i < 300; ++i) {
    std::string w;
    const int len = static_cast<int>(rng() % 9);
    AlgElem prod(1);
    for (int k = 0; k < len; ++k) {
      w += gens[rng() % 4];
      prod = prod * AlgElem::generator(w.back());
    }
    const AlgElem l = normal_form(w, QScalar(1), RewriteStrategy::Leftmost);
    const AlgElem r = normal_form(w, QScalar(1), RewriteStrategy::Rightmost);
    CHECK(l == r);
    CHECK(l == prod);
  }
}

TEST_CASE("associativity on random monomials") {
  std::mt19937 rng(17);
  auto rand_mono = [&] {
    PbwMonomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                  static_cast<int>(rng() % 3)};
    if (rng() % 2) m.a = 0; else m.d = 0;
    return AlgElem::monomial(m);
  };
  for (int i = 0; i < 100; ++i) {
    const AlgElem x = rand_mono(), y = rand_mono(), z = rand_mono();
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("coproduct, counit, antipode, star on generators") {
  CHECK(coproduct(X) == outer(X, X) + outer(U, V));
  CHECK(coproduct(AlgElem(1)) == outer(AlgElem(1), AlgElem(1)));
  CHECK(coproduct(X * X) == outer(A("X^2"), A("X^2")) + outer(X * U, X * V) * parse_qscalar("1+q^2") +
                                outer(A("U^2"), A("V^2")));
  CHECK(counit(X) == QScalar(1));
  CHECK(counit(U * V).is_zero());
  CHECK(counit(AlgElem(1)) == QScalar(1));
  CHECK(antipode(X) == Y);
  CHECK(antipode(U) == A("-q*U"));
  CHECK(antipode(AlgElem(1)) == AlgElem(1));
  CHECK(star(X) == Y);
  CHECK(star(U) == A("-q^-1*V"));
  CHECK(star(X * U) == A("-q^-1*V*Y"));
  for (const AlgElem& g : {X, U, V, Y, X * U * V, A("U*V^2*Y^3")}) {
    CHECK(antipode_inv(antipode(g)) == g);
    CHECK(antipode(antipode_inv(g)) == g);
    CHECK(star(star(g)) == g);
  }
}

TEST_CASE("Hopf axioms on low-degree monomials") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2 - b; ++c)
        for (int d = 0; d <= 2; ++d) {
          if (a > 0 && d > 0) continue;
          const AlgElem x = AlgElem::monomial({a, b, c, d});
          const Tensor2 dx = coproduct(x);
          CHECK(coproduct_left(dx) == coproduct_right(dx));
          CHECK(counit_left(dx) == x);
          CHECK(counit_right(dx) == x);
          CHECK(mult(antipode_left(dx)) == AlgElem(counit(x)));
          CHECK(mult(antipode_right(dx)) == AlgElem(counit(x)));
        }
}

TEST_CASE("d-functions reproduce the printed tables") {
  CHECK(dfun(0, 0, 0) == AlgElem(1));
  CHECK(dfun(1, 1, -1) == U);
  CHECK(dfun(2, 2, 0) == A("q^(1/2)*sqrt(q+q^-1)*X*U"));
  CHECK(dfun(3, 3, 1) == A("q*sqrt(q^2+1+q^-2)*X^2*U"));
  CHECK(dfun(2, 0, 0) == A("1+(q+q^-1)*U*V"));
  CHECK(to_text(dfun(2, 2, 0)) == "q^(1/2)*sqrt(q+q^-1)*X*U");
  const std::vector<std::pair<int, const std::vector<std::vector<const char*>>*>> tables{
      {1, &testing::golden_pi_half()}, {2, &testing::golden_pi_one()}, {3, &testing::golden_pi_three_halves()}};
  for (const auto& [j2, table] : tables)
    for (int r = 0; r <= j2; ++r)
      for (int c = 0; c <= j2; ++c) CHECK(dfun(j2, j2 - 2 * r, j2 - 2 * c) == A((*table)[r][c]));
  CHECK_THROWS_AS(dfun(1, 3, 1), DomainError);
  CHECK_THROWS_AS(dfun(2, 1, 0), DomainError);
}

TEST_CASE("F matrices") {
  CHECK(f_matrix(0) == std::vector<QScalar>{QScalar(1)});
  CHECK(f_matrix(1) == std::vector<QScalar>{QScalar(1), parse_qscalar("q^-2")});
  CHECK(f_matrix(2) == std::vector<QScalar>{QScalar(1), parse_qscalar("q^-2"), parse_qscalar("q^-4")});
  CHECK(f_inv_trace(1) == parse_qscalar("1+q^2"));
}

TEST_CASE("algebra text round trip") {
  for (int j2 = 0; j2 <= 4; ++j2)
    for (int r = 0; r <= j2; ++r)
      for (int c = 0; c <= j2; ++c) {
        const AlgElem d = dfun(j2, j2 - 2 * r, j2 - 2 * c);
        CHECK(parse_alg_elem(to_text(d)) == d);
        CHECK(alg_elem_from_json(to_json(d)) == d);
      }
}
