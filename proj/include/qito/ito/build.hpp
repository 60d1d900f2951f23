#pragma once

#include <vector>

#include "qito/ito/ito.hpp"
#include "qito/suq2/backend.hpp"

namespace qito {

using SuqFamily = ItoFamily<Suq2>;

/// Families of kind `kind` in L^{pr} belonging to pi^q (twice-values). Empty
/// when the multiplicity (the triangle condition for (p, q, r)) vanishes.
///   ordinary  Q_k = sum_{i,l} (r l, bar p i | q k) P^{pr}_{il}
///   twisted   Q_k = sum_{i,l} (bar p'' i, r l | q k) P^{pr}_{il}
/// Each family is scaled so that its largest entry at q = 3/2 is exactly 1.
std::vector<SuqFamily> build_ito(ItoKind kind, int p, int q, int r);

/// The identity of V^p as a family for the trivial corepresentation.
SuqFamily identity_family(ItoKind kind, int p);

/// Rank of the flattened operators evaluated at a rational q.
int numeric_rank(const std::vector<OpMatrix>& ops, const Rational& q, int digits = 30);

/// Scales every operator so the largest entry at q = 3/2 becomes 1.
void normalize_family(std::vector<OpMatrix>& ops);

}  // namespace qito
