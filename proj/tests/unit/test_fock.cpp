#include "doctest.h"
#include "qito/fock/fock.hpp"
#include "qito/suq2/dfun.hpp"
#include "qito/wigner/wigner.hpp"
#include "../support/printers.hpp"

using namespace qito;

namespace {
using Images = std::vector<std::pair<FockState, QScalar>>;
}

TEST_CASE("fock: boson operators") {
  const int n = 8;
  CHECK(boson(BosonOp::Create1, n).apply({0, 0}) == Images{{{1, 0}, QScalar(1)}});
  CHECK(boson(BosonOp::Annih1, n).apply({0, 5}).empty());
  CHECK(boson(BosonOp::Number2, n).apply({1, 3}) == Images{{{1, 3}, QScalar(3)}});
  CHECK(boson(BosonOp::Create1, n).clipped.count({8, 0}) == 1);
  CHECK_THROWS_AS(boson(BosonOp::Create1, n).apply({8, 0}), DomainError);
}

TEST_CASE("fock: number relations and mode commutation") {
  const int n = 9;
  const auto c1 = boson(BosonOp::Create1, n), a1 = boson(BosonOp::Annih1, n);
  const auto c2 = boson(BosonOp::Create2, n), a2 = boson(BosonOp::Annih2, n);
  for (int k = 0; k <= 8; ++k) {
    CHECK(compose(c1, a1).apply({k, 0}) == (k == 0 ? Images{} : Images{{{k, 0}, q_int(k)}}));
    CHECK(compose(a1, c1).apply({k, 0}) == Images{{{k, 0}, q_int(k + 1)}});
    CHECK(compose(c2, a2).apply({0, k}) == (k == 0 ? Images{} : Images{{{0, k}, q_int(k)}}));
    CHECK(compose(a2, c2).apply({0, k}) == Images{{{0, k}, q_int(k + 1)}});
  }
  const std::vector<FockOperator> mode1 = {c1, a1, boson(BosonOp::Number1, n), q_power_number(1, 1, n)};
  const std::vector<FockOperator> mode2 = {c2, a2, boson(BosonOp::Number2, n), q_power_number(2, -1, n)};
  for (const auto& x : mode1)
    for (const auto& y : mode2) CHECK(same_on_unclipped(compose(x, y), compose(y, x)));
}

TEST_CASE("fock: candidate components") {
  const auto raise_ordinary = realize(candidate_variant("raise_ordinary").top, 4);
  CHECK(raise_ordinary.apply({0, 0}) == Images{{{1, 0}, QScalar(1)}});
  const auto lower_ordinary = realize(candidate_variant("lower_ordinary").top, 4);
  CHECK(lower_ordinary.apply({0, 1}) == Images{{{0, 0}, QScalar::t_power(2)}});
  CHECK_THROWS_AS(candidate_variant("sideways"), DomainError);
}

TEST_CASE("fock: big coaction") {
  const auto c = big_coaction(2);
  CHECK(c.dim() == 6);
  CHECK(c(0, 0) == AlgElem(1));
  CHECK(c(big_index({1, 0}), big_index({1, 0})) == AlgElem::generator('X'));
  CHECK(c(big_index({0, 1}), big_index({1, 0})) == AlgElem::generator('V'));
  for (int k = 0; k < 3; ++k) CHECK(c(big_index({2 - k, k}), big_index({2, 0})) == dfun(2, 2 - 2 * k, 2));
  for (int i = 0; i < 10; ++i) CHECK(big_index(big_state(i)) == i);
}

TEST_CASE("fock: candidates as tensor operators") {
  for (const auto& v : candidate_variants()) {
    const ItoKind other = v.kind == ItoKind::Ordinary ? ItoKind::Twisted : ItoKind::Ordinary;
    CHECK(verify_boson_ito(v, v.kind, 2).passed());
    CHECK_FALSE(verify_boson_ito(v, other, 2).passed());
  }
  CHECK_THROWS_AS(verify_boson_ito(candidate_variant("raise_ordinary"), ItoKind::Ordinary, 1), DomainError);
}

TEST_CASE("fock: commutative limit") {
  for (const auto& v : candidate_variants())
    for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) CHECK(verify_boson_ito(v, kind, 2, Rational(1)).passed());
}

TEST_CASE("fock: block factorization and collapse lemma") {
  for (int j = 0; j <= 3; ++j) {
    const auto ops = block_family(candidate_variant("raise_ordinary"), j);
    CHECK(check_wigner_eckart(ops, ItoKind::Ordinary, j, 1, j + 1).passed());
  }
  CHECK(orthogonality_collapse(3).passed());
}
