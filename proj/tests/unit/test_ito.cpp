#include "doctest.h"
#include "qito/cg/cg.hpp"
#include "qito/ito/build.hpp"
#include "qito/suq2/coreps.hpp"
#include "../support/printers.hpp"

using namespace qito;

namespace {
const Suq2 h;
}

TEST_CASE("ito: coaction on operators") {
  // Trivial p = r: the identity is fixed by both coactions.
  const auto t = trivial_corep(h);
  for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
    const auto legs = coaction_on_ops(h, kind, t, t, op_identity(1));
    CHECK(legs(0, 0) == AlgElem(1));
  }
  CHECK_THROWS_AS(coaction_on_ops(h, ItoKind::Ordinary, pi(1), pi(2), op_zero(2, 2)), DomainError);
}

TEST_CASE("ito: both coactions are right coactions") {
  for (int p = 0; p <= 2; ++p)
    for (int r = 0; r <= 2; ++r)
      for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
        const auto c = operator_space_corep(h, kind, pi(p), pi(r));
        CHECK(check_comodule(h, c).passed());
      }
}

TEST_CASE("ito: identifications with tensor products") {
  for (int p = 0; p <= 2; ++p)
    for (int r = 0; r <= 2; ++r) {
      const Report rep = check_identifications(h, pi(p), pi(r));
      CHECK(rep.checks.size() == 3);
      CHECK(rep.passed());
    }
}

TEST_CASE("ito: identity operator") {
  for (int p = 0; p <= 2; ++p)
    for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
      const auto f = identity_family(kind, p);
      CHECK(is_ito(h, f, pi(p), pi(p)).passed());
    }
}

TEST_CASE("ito: built families up to 3/2") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 3; ++r)
        for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
          const auto fams = build_ito(kind, p, q, r);
          CHECK(fams.empty() == !triangle(p, q, r));
          for (const auto& f : fams) {
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(r);
            CHECK(static_cast<int>(f.ops.size()) == q + 1);
            CHECK(is_ito(h, f, pi(p), pi(r)).passed());
            CHECK(ito_identities(h, f, kind, pi(p), pi(r)).passed());
            CHECK(numeric_rank(f.ops, Rational(3, 2)) == q + 1);
          }
        }
}

TEST_CASE("ito: kinds differ at generic q") {
  const auto o = build_ito(ItoKind::Ordinary, 1, 1, 2).at(0);
  const auto t = build_ito(ItoKind::Twisted, 1, 1, 2).at(0);
  CHECK_FALSE(is_ito_as(h, o, ItoKind::Twisted, pi(1), pi(2)).passed());
  CHECK_FALSE(is_ito_as(h, t, ItoKind::Ordinary, pi(1), pi(2)).passed());
  CHECK_FALSE(ito_identities(h, o, ItoKind::Twisted, pi(1), pi(2)).passed());
  CHECK_FALSE(ito_identities(h, t, ItoKind::Ordinary, pi(1), pi(2)).passed());
}

TEST_CASE("ito: extension to a direct sum") {
  for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
    const auto f = build_ito(kind, 1, 1, 2).at(0);
    CHECK(is_ito_extended(h, f, pi(1), pi(2)).passed());
    // A corrupted family fails both ways.
    auto g = f;
    g.ops[0](0, 0) += QScalar(1);
    CHECK_FALSE(is_ito(h, g, pi(1), pi(2)).passed());
    CHECK_FALSE(is_ito_extended(h, g, pi(1), pi(2)).passed());
  }
}

TEST_CASE("ito: normalization") {
  const auto f = build_ito(ItoKind::Ordinary, 1, 1, 2).at(0);
  bool has_one = false;
  for (const auto& Q : f.ops)
    for (int m = 0; m < Q.rows(); ++m)
      for (int i = 0; i < Q.cols(); ++i) has_one = has_one || Q(m, i) == QScalar(1);
  CHECK(has_one);
}
