#include <cmath>
#include <random>

#include "qito/cg/cg.hpp"
#include "qito/classical/classical.hpp"
#include "qito/errors.hpp"
#include "qito/fock/fock.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/ito/build.hpp"
#include "qito/suq2/coreps.hpp"
#include "qito/verify/verify.hpp"
#include "qito/wigner/wigner.hpp"

namespace qito {

using detail::half;
using detail::Tally;

namespace {
std::string triple(int p, int q, int r) { return half(q) + " " + half(p) + "->" + half(r); }
}  // namespace

Report verify_ito(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(3);
  if (jmax < 0) throw DomainError("negative jmax");
  const Suq2 h;
  Report rep;
  rep.suite = "ito";
  const int small = std::min(jmax, 2);
  for (int p = 0; p <= small; ++p)
    for (int r = 0; r <= small; ++r) {
      for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
        const auto c = operator_space_corep(h, kind, pi(p), pi(r));
        const bool ok = check_comodule(h, c).passed();
        rep.add("coaction on operators " + to_string(kind) + " " + half(p) + "->" + half(r), ok);
      }
      rep.merge(check_identifications(h, pi(p), pi(r)));
    }
  for (int p = 0; p <= jmax; ++p)
    for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
      const auto f = identity_family(kind, p);
      rep.add("identity operator " + to_string(kind) + " " + half(p), is_ito(h, f, pi(p), pi(p)).passed());
    }
  for (int p = 0; p <= jmax; ++p)
    for (int q = 0; q <= jmax; ++q)
      for (int r = 0; r <= jmax; ++r)
        for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
          const auto fams = build_ito(kind, p, q, r);
          const std::string tag = to_string(kind) + " " + triple(p, q, r);
          rep.add("existence " + tag, fams.empty() == !triangle(p, q, r),
                  fams.empty() ? "no family" : std::to_string(fams.size()) + " family");
          for (const auto& f : fams) {
            const Report r1 = is_ito(h, f, pi(p), pi(r));
            for (const auto& c : r1.checks) rep.add("defining condition " + tag + (c.name.ends_with("vector") ? " vector" : " operator-space"), c.passed, c.detail);
            rep.add("identities " + tag, ito_identities(h, f, kind, pi(p), pi(r)).passed());
            rep.add("rank " + tag, numeric_rank(f.ops, Rational(3, 2), o.digits) == q + 1);
          }
        }
  if (jmax >= 2) {
    for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) {
      const auto f = build_ito(kind, 1, 1, 2).at(0);
      const ItoKind other = kind == ItoKind::Ordinary ? ItoKind::Twisted : ItoKind::Ordinary;
      rep.add("extension " + to_string(kind) + " " + triple(1, 1, 2), is_ito_extended(h, f, pi(1), pi(2)).passed());
      rep.add("cross-kind " + to_string(kind) + " family fails " + to_string(other) + " condition",
              !is_ito_as(h, f, other, pi(1), pi(2)).passed());
    }
  }
  return rep;
}

Report verify_wigner_eckart(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(3);
  if (jmax < 0) throw DomainError("negative jmax");
  Report rep;
  rep.suite = "wigner-eckart";
  for (int p = 0; p <= jmax; ++p)
    for (int q = 0; q <= jmax; ++q)
      for (int r = 0; r <= jmax; ++r)
        for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted})
          for (const auto& f : build_ito(kind, p, q, r)) {
            const std::string tag = to_string(kind) + " " + triple(p, q, r);
            const Report w = check_wigner_eckart(f.ops, kind, p, q, r);
            rep.add("factorization " + tag, w.passed(), w.checks.empty() ? "" : w.checks.front().detail);
            const auto red = reduced_matrix_elements(f.ops, kind, p, q, r);
            const bool round = red.size() == 1 && !red[0].is_zero() &&
                               reduced_matrix_elements(factorized_ops(red[0], kind, p, q, r), kind, p, q, r) == red;
            rep.add("round trip " + tag, round);
          }
  if (jmax >= 2) {
    const auto ord = build_ito(ItoKind::Ordinary, 1, 1, 2).at(0);
    const auto tw = build_ito(ItoKind::Twisted, 1, 1, 2).at(0);
    rep.add("ordinary family has a twisted-order residual", !check_wigner_eckart(ord.ops, ItoKind::Twisted, 1, 1, 2).passed());
    rep.add("twisted family has an ordinary-order residual", !check_wigner_eckart(tw.ops, ItoKind::Ordinary, 1, 1, 2).passed());
  }
  return rep;
}

Report verify_boson(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(2);
  Report rep;
  rep.suite = "boson";
  for (const auto& v : candidate_variants()) {
    rep.merge(verify_boson_ito(v, v.kind, jmax));
    const ItoKind other = v.kind == ItoKind::Ordinary ? ItoKind::Twisted : ItoKind::Ordinary;
    const Report cross = verify_boson_ito(v, other, jmax);
    rep.add(v.name + " fails as " + to_string(other), !cross.passed(), cross.checks.front().detail);
    for (auto kind : {ItoKind::Ordinary, ItoKind::Twisted}) rep.merge(verify_boson_ito(v, kind, jmax, Rational(1), o.digits));
  }
  rep.merge(orthogonality_collapse(3), "collapse");
  for (int j = 0; j <= 3; ++j) {
    const Report w = check_wigner_eckart(block_family(candidate_variant("raise_ordinary"), j), ItoKind::Ordinary, j, 1, j + 1);
    rep.add("raise_ordinary factorization j=" + half(j), w.passed(), w.checks.empty() ? "" : w.checks.front().detail);
  }
  return rep;
}

Report verify_classical(const VerifyOptions& o) {
  Report rep;
  rep.suite = "classical";
  FiniteGroup g = o.group == "s3" ? symmetric_group_s3() : o.group == "z2" ? cyclic_group(2) : FiniteGroup::load(o.group);
  const FunAlg h(g);
  const int n = g.order();
  // Hopf axioms on delta functions.
  Tally co, cu, an;
  for (int x = 0; x < n; ++x) {
    const FnElem f = FnElem::delta(x);
    FnTensor d = h.coproduct(f);
    // (D (x) id) D = (id (x) D) D, as functions of three variables.
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          ok = f.at(g.mul(g.mul(a, b), c)) == f.at(g.mul(a, g.mul(b, c)));
    co(ok, g.name(x));
    FnElem left, right;
    for (const auto& [hk, c] : d.values) {
      if (hk.first == g.identity()) left = left + FnElem::delta(hk.second, c);
      if (hk.second == g.identity()) right = right + FnElem::delta(hk.first, c);
    }
    cu(left == f && right == f, g.name(x));
    FnTensor sd;
    for (const auto& [hk, c] : d.values) sd.values[{g.inv(hk.first), hk.second}] = c;
    an(h.mult(sd) == h.one() * h.counit(f) && h.antipode(h.antipode(f)) == f, g.name(x));
  }
  co.into(rep, "coassociativity");
  cu.into(rep, "counit");
  an.into(rep, "antipode");

  std::mt19937_64 gen(o.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  Tally haar_avg;
  for (int trial = 0; trial < 20; ++trial) {
    FnElem f;
    QScalar sum;
    for (int x = 0; x < n; ++x) {
      const QScalar v(dist(gen));
      f = f + FnElem::delta(x, v);
      sum += v;
    }
    haar_avg(h.haar(f) == sum / QScalar(n), "trial " + std::to_string(trial));
  }
  haar_avg.into(rep, "haar is the uniform average");

  std::vector<GroupRep> reps = {trivial_rep(g)};
  if (o.group == "s3") reps = {trivial_rep(g), s3_sign_rep(), s3_standard_rep()};
  if (o.group == "z2") reps.push_back(GroupRep{"sign", {OpMatrix(1, 1, QScalar(1)), OpMatrix(1, 1, QScalar(-1))}});
  for (const auto& r : reps) rep.add("comodule " + r.label, check_comodule(h, corep_from_rep(h, r)).passed());
  if (o.group == "s3") {
    // The coefficients of trivial, sign and standard give |G| functions; they
    // form a basis (numeric rank), and h picks out the trivial coefficient.
    std::vector<FnElem> basis;
    for (const auto& r : reps) {
      const auto c = corep_from_rep(h, r);
      for (int j = 0; j < c.dim(); ++j)
        for (int k = 0; k < c.dim(); ++k) basis.push_back(c(j, k));
    }
    std::vector<std::vector<double>> m(basis.size(), std::vector<double>(n));
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (int x = 0; x < n; ++x) m[b][x] = eval_numeric(basis[b].at(x), Rational(1), 20).to_double();
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < m.size(); ++col) {
      std::size_t piv = rank;
      for (std::size_t r = rank; r < m.size(); ++r)
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      if (std::abs(m[piv][col]) < 1e-9) continue;
      std::swap(m[piv], m[rank]);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        const double f = m[r][col] / m[rank][col];
        for (int c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
      }
      ++rank;
    }
    rep.add("matrix coefficients span the functions", static_cast<int>(rank) == n && static_cast<int>(basis.size()) == n,
            "rank " + std::to_string(rank) + " of " + std::to_string(n));
    Tally trivial;
    for (int trial = 0; trial < 20; ++trial) {
      FnElem f;
      QScalar c0;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const QScalar c(dist(gen));
        if (b == 0) c0 = c;
        f = f + basis[b] * c;
      }
      trivial(h.haar(f) == c0, "trial " + std::to_string(trial));
    }
    trivial.into(rep, "haar is the trivial coefficient");
  }

  int families = 0;
  auto record = [&](const ClassicalVerdicts& v, bool expect, const std::string& tag) {
    ++families;
    rep.add("verdicts agree " + tag, v.agree(),
            std::string("ordinary ") + (v.ordinary ? "holds" : "fails") + ", twisted " + (v.twisted ? "holds" : "fails") +
                ", pointwise " + (v.pointwise ? "holds" : "fails"));
    rep.add("expected verdict " + tag, v.pointwise == expect);
  };
  for (const auto& q : reps)
    for (const auto& p : reps)
      for (const auto& r : reps) {
        const auto ops = averaged_family(g, p, q, r);
        if (!ops.empty()) record(classical_equivalence_check(h, p, q, r, ops), true, "built " + q.label + " " + p.label + "->" + r.label);
      }
  for (const auto& p : reps) {
    OpMatrix id(p.dim(), p.dim());
    for (int i = 0; i < p.dim(); ++i) id(i, i) = QScalar(1);
    record(classical_equivalence_check(h, p, reps[0], p, {id}), true, "identity " + p.label);
  }
  // Randomized non-intertwining families; pairs with every 1x1 map an
  // intertwiner are skipped.
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  std::uniform_int_distribution<int> small(-3, 3);
  int negatives = 0;
  for (int attempt = 0; attempt < 400 && negatives < 12; ++attempt) {
    const auto& p = reps[pick(gen)];
    const auto& q = reps[pick(gen)];
    const auto& r = reps[pick(gen)];
    std::vector<OpMatrix> ops(q.dim(), OpMatrix(r.dim(), p.dim()));
    for (auto& Q : ops)
      for (int m = 0; m < r.dim(); ++m)
        for (int i = 0; i < p.dim(); ++i) Q(m, i) = QScalar(small(gen));
    if (pointwise_condition(g, p, q, r, ops)) continue;
    record(classical_equivalence_check(h, p, q, r, ops), false, "random " + std::to_string(negatives) + " " + q.label + " " + p.label + "->" + r.label);
    ++negatives;
  }
  rep.add("family count", true, std::to_string(families) + " families");
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"hopf", "cg", "haar", "ito", "wigner-eckart", "boson", "classical"};
  return n;
}

Report run_suite(const std::string& name, const VerifyOptions& o) {
  Report rep;
  if (name == "hopf") rep = verify_hopf(o);
  else if (name == "cg") rep = verify_cg(o);
  else if (name == "haar") rep = verify_haar(o);
  else if (name == "ito") rep = verify_ito(o);
  else if (name == "wigner-eckart") rep = verify_wigner_eckart(o);
  else if (name == "boson") rep = verify_boson(o);
  else if (name == "classical") rep = verify_classical(o);
  else throw DomainError("unknown suite: " + name);
  rep.sort();
  return rep;
}

}  // namespace qito
