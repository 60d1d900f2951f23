#include "qito/cg/racah.hpp"

#include <cstdlib>

namespace qito {

namespace {
Integer fact(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace

RacahValue racah_cg(int j1, int m1, int j2, int m2, int j, int m) {
  RacahValue v{0, 0};
  if (m != m1 + m2 || j < std::abs(j1 - j2) || j > j1 + j2 || (j1 + j2 + j) % 2 != 0) return v;
  const int a = (j1 + j2 - j) / 2, b = (j1 - j2 + j) / 2, c = (-j1 + j2 + j) / 2, d = (j1 + j2 + j) / 2 + 1;
  v.under = Rational(Integer((j + 1) * fact(a) * fact(b) * fact(c)), fact(d));
  v.under *= fact((j + m) / 2) * fact((j - m) / 2) * fact((j1 - m1) / 2) * fact((j1 + m1) / 2) * fact((j2 - m2) / 2) *
             fact((j2 + m2) / 2);
  v.under.canonicalize();
  for (int k = 0; k <= a; ++k) {
    const int f3 = (j1 - m1) / 2 - k, f4 = (j2 + m2) / 2 - k, f5 = (j - j2 + m1) / 2 + k, f6 = (j - j1 - m2) / 2 + k;
    if (f3 < 0 || f4 < 0 || f5 < 0 || f6 < 0) continue;
    Rational term(1, fact(k) * fact(a - k) * fact(f3) * fact(f4) * fact(f5) * fact(f6));
    term.canonicalize();
    v.sum += (k % 2 == 0) ? term : Rational(-term);
  }
  return v;
}

Real racah_numeric(const RacahValue& v, mpfr_prec_t bits) { return sqrt(Real(v.under, bits)) * Real(v.sum, bits); }

}  // namespace qito
