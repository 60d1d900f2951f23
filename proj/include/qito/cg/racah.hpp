#pragma once

#include "qito/scalar/numeric.hpp"

namespace qito {

// Classical (q = 1) Clebsch-Gordan coefficient from Racah's formula, exact.
// Value = sqrt(under) * sum; independent of the q-deformed code.
struct RacahValue {
  Rational under;  // nonnegative
  Rational sum;
};

/// Twice-values throughout; zero outside the selection rules.
RacahValue racah_cg(int j1, int m1, int j2, int m2, int j, int m);
Real racah_numeric(const RacahValue& v, mpfr_prec_t bits);

}  // namespace qito
