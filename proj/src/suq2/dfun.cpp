#include "qito/suq2/dfun.hpp"

#include <mutex>
#include <tuple>

#include "qito/errors.hpp"

namespace qito {

namespace {

RationalFn rational_factorial(int n) { return q_factorial(n).as_rational(); }

DFunFactored compute_dfun(int j2, int mp2, int m2) {
  const int jpm = (j2 + m2) / 2, jmm = (j2 - m2) / 2;
  const int jpmp = (j2 + mp2) / 2, jmmp = (j2 - mp2) / 2;
  const int diff = (mp2 - m2) / 2;          // m' - m
  const int span = (2 * j2 - mp2 + m2) / 2;  // 2j - m' + m
  DFunFactored out;
  const QScalar facts = q_factorial(jpmp) * q_factorial(jmmp) * q_factorial(jpm) * q_factorial(jmm);
  out.prefactor = QScalar::t_power(diff * span) * sqrt(facts);
  for (int a = 0; a <= jpm; ++a) {
    const int u = diff + a, y = jmmp - a;
    if (u < 0 || y < 0) continue;
    RationalFn coeff(LaurentPoly::t_power(2 * a * (span - a)));
    coeff /= rational_factorial(a) * rational_factorial(jpm - a) * rational_factorial(u) * rational_factorial(y);
    for (const auto& [m, p] : monomial_product(PbwMonomial{jpm - a, u, a, 0}, PbwMonomial{0, 0, 0, y})) {
      auto [it, inserted] = out.body.try_emplace(m, coeff * RationalFn(p));
      if (!inserted) {
        it->second += coeff * RationalFn(p);
        if (it->second.is_zero()) out.body.erase(it);
      }
    }
  }
  return out;
}

std::mutex g_dfun_mutex;
std::map<std::tuple<int, int, int>, DFunFactored> g_dfun_cache;

}  // namespace

const DFunFactored& dfun_factored(int j2, int mp2, int m2) {
  if (!valid_jm(j2, mp2) || !valid_jm(j2, m2))
    throw DomainError("dfun indices out of range: j=" + HalfInt{j2}.to_string() + " m'=" + HalfInt{mp2}.to_string() +
                      " m=" + HalfInt{m2}.to_string());
  const auto key = std::make_tuple(j2, mp2, m2);
  {
    std::lock_guard<std::mutex> lock(g_dfun_mutex);
    auto it = g_dfun_cache.find(key);
    if (it != g_dfun_cache.end()) return it->second;
  }
  DFunFactored res = compute_dfun(j2, mp2, m2);
  std::lock_guard<std::mutex> lock(g_dfun_mutex);
  return g_dfun_cache.try_emplace(key, std::move(res)).first->second;
}

AlgElem dfun(int j2, int mp2, int m2) {
  const DFunFactored& f = dfun_factored(j2, mp2, m2);
  AlgElem out;
  for (const auto& [m, c] : f.body) out.add_term(m, f.prefactor.scaled(c));
  return out;
}

std::vector<QScalar> f_matrix(int j2) {
  if (j2 < 0) throw DomainError("negative spin");
  std::vector<QScalar> d;
  for (int i = 0; i <= j2; ++i) d.push_back(QScalar::t_power(-4 * i));
  return d;
}

QScalar f_inv_trace(int j2) {
  if (j2 < 0) throw DomainError("negative spin");
  QScalar s;
  for (int i = 0; i <= j2; ++i) s += QScalar::t_power(4 * i);
  return s;
}

}  // namespace qito
