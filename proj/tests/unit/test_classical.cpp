#include <random>

#include "doctest.h"
#include "qito/classical/classical.hpp"
#include "../support/printers.hpp"

using namespace qito;

namespace {

// Multiplicity of r in q (x) p from characters (all characters are real here).
int multiplicity(const FiniteGroup& g, const GroupRep& r, const GroupRep& qp) {
  QScalar sum;
  for (int x = 0; x < g.order(); ++x) {
    QScalar cr, cqp;
    for (int i = 0; i < r.dim(); ++i) cr += r.mats[x](i, i);
    for (int i = 0; i < qp.dim(); ++i) cqp += qp.mats[x](i, i);
    sum += cr * cqp;
  }
  return static_cast<int>((sum / QScalar(g.order())).as_rational().num().coeff(0).get_num().get_si());
}

// Intertwiner V^q (x) V^p -> V^r from the projection operators
// P_ab = (d_r/|G|) sum_x Gamma^r(x)_ab Gamma^{q x p}(x): fix b and a seed w with
// P_bb w != 0; then the columns P_ab w span a copy of r with basis e_a, and the
// family is read off the transpose.
std::vector<OpMatrix> projection_oracle(const FiniteGroup& g, const GroupRep& p, const GroupRep& q, const GroupRep& r) {
  const GroupRep qp = tensor(q, p);
  const int d = qp.dim(), dr = r.dim();
  if (multiplicity(g, r, qp) == 0) return {};
  auto apply_p = [&](int a, int b, int seed) {
    std::vector<QScalar> v(d);
    for (int x = 0; x < g.order(); ++x)
      for (int c = 0; c < d; ++c) v[c] += r.mats[x](a, b) * qp.mats[x](c, seed);
    return v;
  };
  for (int seed = 0; seed < d; ++seed) {
    const auto w = apply_p(0, 0, seed);
    bool zero = true;
    for (const auto& c : w) zero = zero && c.is_zero();
    if (zero) continue;
    std::vector<OpMatrix> ops(q.dim(), OpMatrix(dr, p.dim()));
    for (int a = 0; a < dr; ++a) {
      const auto col = apply_p(a, 0, seed);
      for (int k = 0; k < q.dim(); ++k)
        for (int i = 0; i < p.dim(); ++i) ops[k](a, i) = col[k * p.dim() + i];
    }
    return ops;
  }
  return {};
}

struct Triple {
  GroupRep p, q, r;
};

std::vector<GroupRep> s3_irreps() { return {trivial_rep(symmetric_group_s3()), s3_sign_rep(), s3_standard_rep()}; }

}  // namespace

TEST_CASE("classical: group tables") {
  const auto s3 = symmetric_group_s3();
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK(s3.mul(1, 4) != s3.mul(4, 1));
  CHECK(s3.inv(4) == 5);
  const auto j = nlohmann::json::parse(R"({"order": 2, "mul": [[0,1],[1,0]], "names": ["e","a"]})");
  const auto z2 = FiniteGroup::from_json(j);
  CHECK(z2.inv(1) == 1);
  CHECK(z2.name(1) == "a");
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_json(nlohmann::json::parse(R"({"order": 3, "mul": [[0]]})")), DomainError);
}

TEST_CASE("classical: Hopf structure") {
  const FunAlg z2(cyclic_group(2));
  const auto d = z2.coproduct(FnElem::delta(0));
  FnTensor expected;
  expected.values[{0, 0}] = QScalar(1);
  expected.values[{1, 1}] = QScalar(1);
  CHECK(d == expected);

  const FunAlg h(symmetric_group_s3());
  for (int g = 0; g < 6; ++g) {
    const auto f = FnElem::delta(g, QScalar(g + 1));
    CHECK(h.antipode(h.antipode(f)) == f);
    // (e (x) id) D = id = (id (x) e) D
    FnElem left, right;
    for (const auto& [hk, c] : h.coproduct(f).values) {
      if (hk.first == 0) left = left + FnElem::delta(hk.second, c);
      if (hk.second == 0) right = right + FnElem::delta(hk.first, c);
    }
    CHECK(left == f);
    CHECK(right == f);
    // M (S (x) id) D = e(f) 1
    FnElem s;
    for (const auto& [hk, c] : h.coproduct(f).values)
      if (h.group->inv(hk.first) == hk.second) s = s + FnElem::delta(h.group->inv(hk.first), c);
    CHECK(s == h.one() * h.counit(f));
  }
}

TEST_CASE("classical: coreps from representations") {
  const auto s3 = symmetric_group_s3();
  const FunAlg h(s3);
  const auto triv = corep_from_rep(h, trivial_rep(s3));
  CHECK(triv(0, 0) == h.one());
  for (const auto& rep : s3_irreps()) CHECK(check_comodule(h, corep_from_rep(h, rep)).passed());
  const auto std2 = s3_standard_rep();
  CHECK(std2.mats[4](1, 0) * std2.mats[4](1, 0) == QScalar(Rational(3, 4)));
  CHECK_FALSE(std2.mats[4](1, 0).is_rational());
  CHECK(std2.mats[4](0, 0) == QScalar(Rational(-1, 2)));
  GroupRep broken = std2;
  broken.mats[1] = broken.mats[4];
  CHECK_THROWS_AS(corep_from_rep(h, broken), DomainError);
}

TEST_CASE("classical: Haar is the uniform average") {
  const auto s3 = symmetric_group_s3();
  const FunAlg h(s3);
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    FnElem f;
    QScalar sum;
    for (int x = 0; x < 6; ++x) {
      const QScalar v(dist(gen));
      f = f + FnElem::delta(x, v);
      sum += v;
    }
    CHECK(h.haar(f) == sum / QScalar(6));
  }
  // Haar kills nontrivial coefficients.
  for (const auto& rep : {s3_sign_rep(), s3_standard_rep()}) {
    const auto c = corep_from_rep(h, rep);
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k) CHECK(h.haar(c(j, k)).is_zero());
  }
}

TEST_CASE("classical: three verdicts agree") {
  const auto s3 = symmetric_group_s3();
  const FunAlg h(s3);
  const auto irreps = s3_irreps();
  int families = 0, positives = 0;

  for (const auto& q : irreps)
    for (const auto& p : irreps)
      for (const auto& r : irreps) {
        const auto oracle = projection_oracle(s3, p, q, r);
        const auto built = averaged_family(s3, p, q, r);
        CHECK(oracle.empty() == built.empty());
        if (oracle.empty()) continue;
        for (const auto* ops : {&oracle, &built}) {
          const auto v = classical_equivalence_check(h, p, q, r, *ops);
          CHECK(v.agree());
          CHECK(v.report.passed());
          ++families;
          ++positives;
        }
      }
  CHECK(positives == 22);

  SUBCASE("identity operator with trivial q") {
    for (const auto& p : irreps) {
      OpMatrix id(p.dim(), p.dim());
      for (int i = 0; i < p.dim(); ++i) id(i, i) = QScalar(1);
      const auto v = classical_equivalence_check(h, p, trivial_rep(s3), p, {id});
      CHECK(v.report.passed());
    }
  }

  SUBCASE("randomized negatives") {
    std::mt19937 gen(20240607);
    std::uniform_int_distribution<int> dist(-3, 3), pick(0, 2);
    int negatives = 0;
    while (negatives < 12) {
      const auto& p = irreps[pick(gen)];
      const auto& q = irreps[pick(gen)];
      const auto& r = irreps[pick(gen)];
      if (p.dim() == 1 && r.dim() == 1) continue;  // every 1x1 family may intertwine
      std::vector<OpMatrix> ops(q.dim(), OpMatrix(r.dim(), p.dim()));
      for (auto& Q : ops)
        for (int m = 0; m < r.dim(); ++m)
          for (int i = 0; i < p.dim(); ++i) Q(m, i) = QScalar(dist(gen));
      // A draw that happens to intertwine is not a negative.
      if (pointwise_condition(s3, p, q, r, ops)) continue;
      const auto v = classical_equivalence_check(h, p, q, r, ops);
      CHECK(v.agree());
      CHECK_FALSE(v.ordinary);
      ++negatives;
    }
    CHECK(families + negatives >= 20);
  }
}

TEST_CASE("classical: reducible q with two copies") {
  // standard (x) (trivial + standard) contains standard twice; the two
  // families are stacked into one with q = trivial + standard.
  const auto s3 = symmetric_group_s3();
  const FunAlg h(s3);
  const auto triv = trivial_rep(s3), std2 = s3_standard_rep();
  const auto a = averaged_family(s3, std2, triv, std2);
  const auto b = averaged_family(s3, std2, std2, std2);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 2);
  std::vector<OpMatrix> ops = {a[0], b[0], b[1]};
  const auto q = direct_sum(triv, std2);
  const auto v = classical_equivalence_check(h, std2, q, std2, ops);
  CHECK(v.agree());
  CHECK(v.report.passed());
  std::swap(ops[0], ops[1]);
  CHECK_FALSE(classical_equivalence_check(h, std2, q, std2, ops).pointwise);
}

TEST_CASE("classical: Z2 smoke") {
  const auto z2 = cyclic_group(2);
  const FunAlg h(z2);
  GroupRep sign{"sign", {OpMatrix(1, 1, QScalar(1)), OpMatrix(1, 1, QScalar(-1))}};
  CHECK(check_comodule(h, corep_from_rep(h, sign)).passed());
  const auto v = classical_equivalence_check(h, trivial_rep(z2), sign, sign, {OpMatrix(1, 1, QScalar(2))});
  CHECK(v.report.passed());
  const auto w = classical_equivalence_check(h, trivial_rep(z2), trivial_rep(z2), sign, {OpMatrix(1, 1, QScalar(1))});
  CHECK(w.agree());
  CHECK_FALSE(w.pointwise);
}
