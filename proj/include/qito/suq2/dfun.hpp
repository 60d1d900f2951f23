#pragma once

#include <map>
#include <vector>

#include "qito/suq2/half_int.hpp"
#include "qito/suq2/pbw.hpp"

namespace qito {

// pi^j_{m'm} = prefactor * body, where the prefactor is the single radical
//   q^((m'-m)(2j-m'+m)/2) sqrt([j+m']! [j-m']! [j+m]! [j-m]!)
// and body has rational-function coefficients:
//   sum_a q^(a(2j-m'+m-a)) X^(j+m-a) U^(m'-m+a) V^a Y^(j-m'-a)
//         / ([a]! [j+m-a]! [m'-m+a]! [j-m'-a]!)
struct DFunFactored {
  QScalar prefactor;
  std::map<PbwMonomial, RationalFn> body;
};

/// Arguments are twice-values. Memoized.
const DFunFactored& dfun_factored(int j2, int mp2, int m2);

AlgElem dfun(int j2, int mp2, int m2);
inline AlgElem dfun(HalfInt j, HalfInt mp, HalfInt m) { return dfun(j.twice, mp.twice, m.twice); }

/// Diagonal of F^j = diag(q^(-2(j-m))), m running down from j.
std::vector<QScalar> f_matrix(int j2);
/// tr((F^j)^-1) = sum_m q^(2(j-m)).
QScalar f_inv_trace(int j2);

}  // namespace qito
