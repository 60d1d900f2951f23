#pragma once

#include <compare>
#include <map>

#include "qito/suq2/pbw.hpp"

namespace qito {

// Index of pi^j_{m'm}, twice-values.
struct DKey {
  int j, mp, m;
  friend auto operator<=>(const DKey&, const DKey&) = default;
};

using BasisExpansion = std::map<DKey, QScalar>;

/// Default bound on j (twice-value) for basis expansion.
inline constexpr int kDefaultHaarJmax = 6;

/// Torus weights (2m', 2m) carried by a PBW monomial: X (+,+), U (+,-),
/// V (-,+), Y (-,-), each of size 1/2. Every relation preserves them.
std::pair<int, int> weight(const PbwMonomial& m);

/// x = sum c_{j m' m} pi^j_{m'm}. The matrix coefficients with j <= jmax span
/// exactly the PBW monomials of degree <= 2 jmax; anything outside throws
/// SpanExceededError naming the monomials.
BasisExpansion to_matrix_coeff_basis(const AlgElem& x, int jmax = kDefaultHaarJmax);

/// Coefficient of pi^0_{00} = 1.
QScalar haar(const AlgElem& x, int jmax = kDefaultHaarJmax);

/// (h (x) id) and (id (x) h) on A (x) A.
AlgElem haar_left(const Tensor2& t, int jmax = kDefaultHaarJmax);
AlgElem haar_right(const Tensor2& t, int jmax = kDefaultHaarJmax);

/// Closed form for h(pi^{r*}_{u l} pi^q_{t k} pi^p_{s j}):
///   (r l | q k, p j) (q t, p s | r u) (F^r)^-1_{uu} / tr (F^r)^-1,
/// zero when r is not in q (x) p. Labels and indices are twice-values.
QScalar haar_triple(int r, int u, int l, int q, int t, int k, int p, int s, int j);

}  // namespace qito
