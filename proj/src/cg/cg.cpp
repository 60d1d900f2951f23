#include "qito/cg/cg.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "qito/errors.hpp"
#include "qito/suq2/dfun.hpp"

namespace qito {

namespace {

RationalFn rfact(int n) { return q_factorial(n).as_rational(); }

void require_jm(int j, int m, const char* what) {
  if (!valid_jm(j, m))
    throw DomainError(std::string("invalid ") + what + " pair: j=" + HalfInt{j}.to_string() + " m=" + HalfInt{m}.to_string());
}

QScalar compute_cg(int j1, int m1, int j2, int m2, int j, int m) {
  // Half-integer combinations below are integral once the triangle holds.
  const int s_ab = (-j1 + j2 + j) / 2, s_ac = (j1 - j2 + j) / 2, s_bc = (j1 + j2 - j) / 2, s_all = (j1 + j2 + j) / 2 + 1;
  const int e = j1 * (j1 + 2) + j2 * (j2 + 2) - j * (j + 2) + 2 * (j1 * j2 + j1 * m2 - j2 * m1);
  // e is even; the q-power is q^(e/8) = q_quarter_power(e/2).
  RationalFn under = rfact(s_ab) * rfact(s_ac) * rfact(s_bc) / rfact(s_all);
  under *= rfact((j1 + m1) / 2) * rfact((j1 - m1) / 2) * rfact((j2 + m2) / 2) * rfact((j2 - m2) / 2);
  under *= rfact((j + m) / 2) * rfact((j - m) / 2) * q_int(j + 1).as_rational();
  const QScalar prefactor = QScalar::q_quarter_power(e / 2) * sqrt(QScalar(under));

  const int lo = std::max({0, (j2 - j - m1) / 2, (j1 - j + m2) / 2});
  const int hi = std::min({s_bc, (j1 - m1) / 2, (j2 + m2) / 2});
  RationalFn sum;
  for (int a = lo; a <= hi; ++a) {
    RationalFn term(LaurentPoly::monomial(Rational(a % 2 == 0 ? 1 : -1), -a * (j1 + j2 + j + 2)));
    term /= rfact(a) * rfact(s_bc - a) * rfact((j1 - m1) / 2 - a) * rfact((j2 + m2) / 2 - a) *
            rfact((j - j2 + m1) / 2 + a) * rfact((j - j1 - m2) / 2 + a);
    sum += term;
  }
  return prefactor.scaled(sum);
}

std::mutex g_cg_mutex;
std::map<CgKey, QScalar> g_cg_cache;

QScalar sign_power(int twice_exponent) { return QScalar((twice_exponent / 2) % 2 == 0 ? 1 : -1); }

// c_m = (-1)^{p-m} q^{-m}.
QScalar conj_phase(int p, int mp) { return sign_power(p - mp) * QScalar::t_power(-mp); }

QScalar half_closed_form(int j, int m, int quarter_exp, int qint_arg) {
  require_jm(j, m, "(j, m)");
  const QScalar root = sqrt(q_int(qint_arg) * q_int(2) * q_factorial(j) / q_factorial(j + 2));
  return sign_power(j - m) * QScalar::q_quarter_power(quarter_exp) * root;
}

}  // namespace

bool triangle(int j1, int j2, int j) {
  return j1 >= 0 && j2 >= 0 && j >= std::abs(j1 - j2) && j <= j1 + j2 && (j1 + j2 + j) % 2 == 0;
}

QScalar cg(int j1, int m1, int j2, int m2, int j, int m) {
  require_jm(j1, m1, "(j1, m1)");
  require_jm(j2, m2, "(j2, m2)");
  require_jm(j, m, "(j, m)");
  if (m != m1 + m2 || !triangle(j1, j2, j)) return QScalar();
  const CgKey key{j1, m1, j2, m2, j, m};
  {
    std::lock_guard<std::mutex> lock(g_cg_mutex);
    if (auto it = g_cg_cache.find(key); it != g_cg_cache.end()) return it->second;
  }
  QScalar v = compute_cg(j1, m1, j2, m2, j, m);
  std::lock_guard<std::mutex> lock(g_cg_mutex);
  return g_cg_cache.try_emplace(key, std::move(v)).first->second;
}

std::vector<CoupledState> couple(int j1, int j2) {
  if (j1 < 0 || j2 < 0) throw DomainError("negative spin");
  std::vector<CoupledState> out;
  for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2)
    for (int m = j; m >= -j; m -= 2) {
      CoupledState st{j, m, {}};
      for (int m1 = j1; m1 >= -j1; m1 -= 2) {
        const int m2 = m - m1;
        if (!valid_jm(j2, m2)) continue;
        QScalar c = cg(j1, m1, j2, m2, j, m);
        if (!c.is_zero()) st.components.push_back({m1, m2, std::move(c)});
      }
      out.push_back(std::move(st));
    }
  return out;
}

AlgElem expand_product(int j1, int mp1, int m1, int j2, int mp2, int m2) {
  require_jm(j1, mp1, "(j1, m1')");
  require_jm(j1, m1, "(j1, m1)");
  require_jm(j2, mp2, "(j2, m2')");
  require_jm(j2, m2, "(j2, m2)");
  const int mp = mp1 + mp2, m = m1 + m2;
  AlgElem out;
  for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2) {
    if (std::abs(mp) > j || std::abs(m) > j) continue;
    const QScalar c = cg(j1, mp1, j2, mp2, j, mp) * cg(j1, m1, j2, m2, j, m);
    if (!c.is_zero()) out += dfun(j, mp, m) * c;
  }
  return out;
}

QScalar half_top_printed(int j, int m) { return half_closed_form(j, m, -2 * j + 2 + 3 * m, (j + m) / 2 + 1); }
QScalar half_top_corrected(int j, int m) { return half_closed_form(j, m, -j + 3 * m, (j + m) / 2 + 1); }
QScalar half_bottom_printed(int j, int m) { return half_closed_form(j, m, 2 + 3 * m, (j - m) / 2 + 1); }
QScalar half_bottom_corrected(int j, int m) { return half_closed_form(j, m, j + 3 * m, (j - m) / 2 + 1); }

QScalar cg_conjugate_label(ConjVariant v, int a, int ma, int b, int mb, int q, int k) {
  switch (v) {
    case ConjVariant::RPBar:
      require_jm(b, mb, "(p, m)");
      return conj_phase(b, mb) * cg(a, ma, b, -mb, q, k);
    case ConjVariant::PBarR:
      require_jm(a, ma, "(p, m)");
      return conj_phase(a, ma) * cg(a, -ma, b, mb, q, k);
    case ConjVariant::PBarDaggerR:
      require_jm(a, ma, "(p, m)");
      return QScalar::t_power(-2 * (a - ma)) * conj_phase(a, ma) * cg(a, -ma, b, mb, q, k);
  }
  throw DomainError("unknown conjugate variant");
}

namespace {
template <class F>
Matrix<QScalar> build_matrix(int a, int b, int q, F&& value) {
  Matrix<QScalar> C((a + 1) * (b + 1), q + 1);
  for (int ia = 0; ia <= a; ++ia)
    for (int ib = 0; ib <= b; ++ib)
      for (int k = 0; k <= q; ++k)
        C(ia * (b + 1) + ib, k) = value(m_twice_of_index(a, ia), m_twice_of_index(b, ib), m_twice_of_index(q, k));
  return C;
}
}  // namespace

Matrix<QScalar> cg_matrix(int a, int b, int q) {
  return build_matrix(a, b, q, [&](int ma, int mb, int k) { return cg(a, ma, b, mb, q, k); });
}

Matrix<QScalar> cg_matrix(ConjVariant v, int a, int b, int q) {
  return build_matrix(a, b, q, [&](int ma, int mb, int k) { return cg_conjugate_label(v, a, ma, b, mb, q, k); });
}

}  // namespace qito
