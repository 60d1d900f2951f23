#pragma once

#include <random>

#include "qito/scalar/qscalar.hpp"

namespace qito::testing {

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), expo(-4, 4), num(-5, 5), den(1, 3);
  LaurentPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(Rational(num(rng), den(rng)), expo(rng));
  return p;
}

// Random element with up to three radical terms drawn from q-number roots and
// quarter powers of q, with polynomial or q-number-denominator coefficients.
inline QScalar random_qscalar(std::mt19937& rng) {
  static const std::vector<QScalar> roots = [] {
    std::vector<QScalar> r{QScalar(1), sqrt(q_int(2)), sqrt(q_int(3)), QScalar::q_quarter_power(1),
                           sqrt(q_int(2) * q_int(3)), sqrt(QScalar(2)), sqrt(q_int(4))};
    return r;
  }();
  std::uniform_int_distribution<int> nterms(0, 3), pick(0, static_cast<int>(roots.size()) - 1), dsel(0, 3);
  QScalar out;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    QScalar c(random_laurent(rng));
    const int d = dsel(rng);
    if (d >= 2) c /= q_int(d);
    out += c * roots[static_cast<std::size_t>(pick(rng))];
  }
  return out;
}

}  // namespace qito::testing
