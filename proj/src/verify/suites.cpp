#include "qito/verify/verify.hpp"

#include <random>

#include "qito/cg/cg.hpp"
#include "qito/cg/racah.hpp"
#include "qito/errors.hpp"
#include "qito/haar/haar.hpp"
#include "qito/scalar/text.hpp"
#include "qito/suq2/backend.hpp"
#include "qito/suq2/coreps.hpp"
#include "qito/suq2/dfun.hpp"

namespace qito {

namespace detail {
std::string half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}
}  // namespace detail

using detail::half;
using detail::Tally;

namespace {

std::vector<PbwMonomial> monomials_up_to(int deg) {
  std::vector<PbwMonomial> out;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c)
        for (int d = 0; a + b + c + d <= deg; ++d)
          if (a == 0 || d == 0) out.push_back({a, b, c, d});
  return out;
}

std::string where(int j, int a, int b) { return "j=" + half(j) + " (" + half(a) + "," + half(b) + ")"; }

}  // namespace

Report verify_hopf(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(3);
  if (jmax < 0) throw DomainError("negative jmax");
  const Suq2 h;
  Report rep;
  rep.suite = "hopf";
  for (int j = 0; j <= jmax; ++j) {
    const std::string tag = " j=" + half(j);
    const auto c = pi(j);
    rep.merge(check_comodule(h, c));
    Tally ant, st, s2, frel, uni3, uni4;
    const auto f = f_matrix(j);
    for (int a = j; a >= -j; a -= 2)
      for (int b = j; b >= -j; b -= 2) {
        const AlgElem x = dfun(j, a, b);
        const int k = b - a;  // 2(m - m')
        const QScalar sign((k / 2) % 2 == 0 ? 1 : -1);
        ant(antipode(x) == dfun(j, -b, -a) * (sign * QScalar::t_power(-k)), where(j, a, b));
        st(star(x) == dfun(j, -a, -b) * (sign * QScalar::t_power(k)), where(j, a, b));
        s2(antipode(antipode(x)) == x * QScalar::t_power(-2 * k), where(j, a, b));
        const int ia = index_of_m_twice(j, a), ib = index_of_m_twice(j, b);
        frel(x * f[ia] == antipode(antipode(x)) * f[ib], where(j, a, b));
      }
    for (int k = 0; k <= j; ++k)
      for (int m = 0; m <= j; ++m) {
        AlgElem s3, s4;
        for (int l = 0; l <= j; ++l) {
          s3 += star(c(l, k)) * c(l, m);
          s4 += c(k, l) * star(c(m, l));
        }
        const AlgElem delta(k == m ? 1 : 0);
        uni3(s3 == delta, "(" + std::to_string(k) + "," + std::to_string(m) + ")");
        uni4(s4 == delta, "(" + std::to_string(k) + "," + std::to_string(m) + ")");
      }
    ant.into(rep, "antipode on coefficients" + tag);
    st.into(rep, "star on coefficients" + tag);
    s2.into(rep, "squared antipode on coefficients" + tag);
    frel.into(rep, "F relation" + tag);
    uni3.into(rep, "unitarity columns" + tag);
    uni4.into(rep, "unitarity rows" + tag);
  }
  Tally coassoc, counit_l, counit_r, ant_l, ant_r;
  for (const auto& m : monomials_up_to(4)) {
    const AlgElem x = AlgElem::monomial(m);
    const Tensor2 dx = coproduct(x);
    const std::string w = to_text(x);
    coassoc(coproduct_left(dx) == coproduct_right(dx), w);
    counit_l(counit_left(dx) == x, w);
    counit_r(counit_right(dx) == x, w);
    ant_l(mult(antipode_left(dx)) == AlgElem(counit(x)), w);
    ant_r(mult(antipode_right(dx)) == AlgElem(counit(x)), w);
  }
  coassoc.into(rep, "axioms coassociativity degree<=4");
  counit_l.into(rep, "axioms left counit degree<=4");
  counit_r.into(rep, "axioms right counit degree<=4");
  ant_l.into(rep, "axioms left antipode degree<=4");
  ant_r.into(rep, "axioms right antipode degree<=4");
  std::mt19937_64 gen(o.seed);
  const auto monos = monomials_up_to(3);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Tally assoc, hom;
  for (int trial = 0; trial < 30; ++trial) {
    const AlgElem x = AlgElem::monomial(monos[pick(gen)]), y = AlgElem::monomial(monos[pick(gen)]),
                  z = AlgElem::monomial(monos[pick(gen)]);
    const std::string w = to_text(x) + ", " + to_text(y) + ", " + to_text(z);
    assoc((x * y) * z == x * (y * z), w);
    hom(coproduct(x * y) == coproduct(x) * coproduct(y), w);
  }
  assoc.into(rep, "random associativity");
  hom.into(rep, "random coproduct multiplicativity");
  return rep;
}

Report verify_cg(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(3);
  if (jmax < 0) throw DomainError("negative jmax");
  const Suq2 h;
  Report rep;
  rep.suite = "cg";
  // Spin-1/2 closed forms: printed and corrected.
  for (int j = 0; j <= jmax; ++j) {
    Tally top_p, bot_p, top_c, bot_c;
    for (int m = j; m >= -j; m -= 2) {
      const std::string w = "m=" + half(m);
      const QScalar top = cg(j + 1, m + 1, j, -m, 1, 1), bot = cg(j + 1, m - 1, j, -m, 1, -1);
      top_p(half_top_printed(j, m) == top, w);
      bot_p(half_bottom_printed(j, m) == bot, w);
      top_c(half_top_corrected(j, m) == top, w);
      bot_c(half_bottom_corrected(j, m) == bot, w);
    }
    const std::string tag = " j=" + half(j);
    top_p.into(rep, "spin-1/2 closed form top as printed" + tag);
    bot_p.into(rep, "spin-1/2 closed form bottom as printed" + tag);
    top_c.into(rep, "spin-1/2 closed form top corrected" + tag);
    bot_c.into(rep, "spin-1/2 closed form bottom corrected" + tag);
  }
  // Orthogonality and completeness.
  for (int j1 = 0; j1 <= jmax; ++j1)
    for (int j2 = 0; j2 <= jmax; ++j2) {
      Tally orth, comp;
      for (int ja = std::abs(j1 - j2); ja <= j1 + j2; ja += 2)
        for (int jb = std::abs(j1 - j2); jb <= j1 + j2; jb += 2)
          for (int m = -std::min(ja, jb); m <= std::min(ja, jb); m += 2) {
            if ((ja - m) % 2 != 0) continue;
            QScalar s;
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
              const int m2 = m - m1;
              if (std::abs(m2) > j2) continue;
              s += cg(j1, m1, j2, m2, ja, m) * cg(j1, m1, j2, m2, jb, m);
            }
            orth(s == QScalar(ja == jb ? 1 : 0), "j=" + half(ja) + "," + half(jb) + " m=" + half(m));
          }
      for (int m1 = -j1; m1 <= j1; m1 += 2)
        for (int m2 = -j2; m2 <= j2; m2 += 2)
          for (int n1 = -j1; n1 <= j1; n1 += 2) {
            const int n2 = m1 + m2 - n1;
            if (std::abs(n2) > j2) continue;
            QScalar s;
            for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2)
              if (std::abs(m1 + m2) <= j) s += cg(j1, m1, j2, m2, j, m1 + m2) * cg(j1, n1, j2, n2, j, m1 + m2);
            comp(s == QScalar(m1 == n1 ? 1 : 0), "(" + half(m1) + "," + half(m2) + ")(" + half(n1) + "," + half(n2) + ")");
          }
      const std::string tag = " " + half(j1) + "x" + half(j2);
      orth.into(rep, "orthogonality" + tag);
      comp.into(rep, "completeness" + tag);
    }
  // Product expansion against direct multiplication, labels <= 1.
  const int pj = std::min(jmax, 2);
  for (int j1 = 0; j1 <= pj; ++j1)
    for (int j2 = 0; j2 <= pj; ++j2) {
      Tally t;
      for (int a = j1; a >= -j1; a -= 2)
        for (int b = j1; b >= -j1; b -= 2)
          for (int c = j2; c >= -j2; c -= 2)
            for (int d = j2; d >= -j2; d -= 2)
              t(expand_product(j1, a, b, j2, c, d) == dfun(j1, a, b) * dfun(j2, c, d),
                "(" + half(a) + "," + half(b) + ")(" + half(c) + "," + half(d) + ")");
      t.into(rep, "product expansion " + half(j1) + "x" + half(j2));
    }
  // Classical limit, one sign per block.
  const mpfr_prec_t bits = bits_for_digits(o.digits);
  const Real tol = decimal_epsilon(o.digits - 5, bits);
  for (int j1 = 0; j1 <= jmax; ++j1)
    for (int j2 = 0; j2 <= jmax; ++j2)
      for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2) {
        int block_sign = 0;
        Tally t;
        for (int m1 = j1; m1 >= -j1; m1 -= 2)
          for (int m2 = j2; m2 >= -j2; m2 -= 2) {
            const int m = m1 + m2;
            if (std::abs(m) > j) continue;
            const Real x = eval_numeric(cg(j1, m1, j2, m2, j, m), Rational(1), o.digits);
            const Real y = racah_numeric(racah_cg(j1, m1, j2, m2, j, m), bits);
            if (block_sign == 0 && y.sign() != 0) block_sign = x.sign() == y.sign() ? 1 : -1;
            t(abs(block_sign < 0 ? x + y : x - y) <= tol, "(" + half(m1) + "," + half(m2) + ")");
          }
        t.into(rep, "classical limit " + half(j1) + "x" + half(j2) + "->" + half(j) + (block_sign < 0 ? " sign -1" : " sign +1"));
      }
  // Intertwining for the standard and conjugate-label reductions.
  for (int a = 0; a <= pj; ++a)
    for (int b = 0; b <= pj; ++b)
      for (int q = std::abs(a - b); q <= a + b; q += 2) {
        const auto pa = pi(a), pb = pi(b), target = pi(q);
        const std::string tag = " " + half(a) + "," + half(b) + "->" + half(q);
        auto one = [&](const Report& r, const std::string& name) { rep.add(name + tag, r.passed(), r.passed() ? "" : r.checks.front().detail); };
        one(check_intertwiner(h, tensor_ordinary(h, pa, pb), cg_matrix(a, b, q), target, "std"), "intertwiner standard");
        one(check_intertwiner(h, tensor_ordinary(h, pa, conjugate(h, pb)), cg_matrix(ConjVariant::RPBar, a, b, q), target, "rpbar"),
            "intertwiner r,bar p");
        one(check_intertwiner(h, tensor_ordinary(h, conjugate(h, pa), pb), cg_matrix(ConjVariant::PBarR, a, b, q), target, "pbarr"),
            "intertwiner bar p,r");
        one(check_intertwiner(h, tensor_ordinary(h, conjugate(h, double_contragredient(h, pa)), pb),
                              cg_matrix(ConjVariant::PBarDaggerR, a, b, q), target, "pbardaggerr"),
            "intertwiner bar p'',r");
      }
  return rep;
}

Report verify_haar(const VerifyOptions& o) {
  const int jmax = o.jmax.value_or(2);
  if (jmax < 0) throw DomainError("negative jmax");
  Report rep;
  rep.suite = "haar";
  const AlgElem U = AlgElem::generator('U'), V = AlgElem::generator('V');
  const QScalar huv = haar(U * V), expected = QScalar(-1) / q_int(2);
  rep.add("h(UV) = -1/[2]", huv == expected, to_text(huv), to_text(huv), to_text(expected));
  rep.add("h(1) = 1", haar(AlgElem(1)) == QScalar(1));
  Tally recon, left, right;
  for (const auto& m : monomials_up_to(4)) {
    const AlgElem x = AlgElem::monomial(m);
    AlgElem back;
    for (const auto& [k, c] : to_matrix_coeff_basis(x)) back += dfun(k.j, k.mp, k.m) * c;
    recon(back == x, to_text(x));
    const Tensor2 d = coproduct(x);
    const AlgElem hx(haar(x));
    left(haar_left(d) == hx, to_text(x));
    right(haar_right(d) == hx, to_text(x));
  }
  recon.into(rep, "basis reconstruction degree<=4");
  left.into(rep, "left invariance degree<=4");
  right.into(rep, "right invariance degree<=4");
  Tally orth;
  for (int j = 0; j <= std::max(jmax, 3); ++j)
    for (int a = j; a >= -j; a -= 2)
      for (int b = j; b >= -j; b -= 2) orth(haar(dfun(j, a, b)) == QScalar(j == 0 ? 1 : 0), where(j, a, b));
  orth.into(rep, "vanishing on nontrivial coefficients");
  for (int r = 0; r <= jmax; ++r)
    for (int q = 0; q <= jmax; ++q)
      for (int p = 0; p <= jmax; ++p) {
        Tally t;
        for (int u = r; u >= -r; u -= 2)
          for (int l = r; l >= -r; l -= 2) {
            const AlgElem rs = star(dfun(r, u, l));
            for (int tt = q; tt >= -q; tt -= 2)
              for (int k = q; k >= -q; k -= 2) {
                const AlgElem rq = rs * dfun(q, tt, k);
                for (int s = p; s >= -p; s -= 2)
                  for (int j = p; j >= -p; j -= 2)
                    t(haar(rq * dfun(p, s, j)) == haar_triple(r, u, l, q, tt, k, p, s, j),
                      "(" + half(u) + "," + half(l) + ")(" + half(tt) + "," + half(k) + ")(" + half(s) + "," + half(j) + ")");
              }
          }
        t.into(rep, "triple product " + half(r) + "," + half(q) + "," + half(p));
      }
  return rep;
}

}  // namespace qito
