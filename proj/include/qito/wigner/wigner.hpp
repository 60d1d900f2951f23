#pragma once

#include <vector>

#include "qito/ito/build.hpp"

namespace qito {

/// Which coupling order the theorem uses: ordinary families couple (q, p) and
/// twisted ones (p, q).
using CouplingOrder = ItoKind;

/// Reduced matrix elements, one per multiplicity index (0 or 1 for SU_q(2)):
///   sum_{s,t,u} <v^r_u, Q_t v^p_s> (q t, p s | r u) (F^r)^-1_{uu} / tr (F^r)^-1
/// with (p s, q t | r u) for the twisted order. Labels are twice-values.
std::vector<QScalar> reduced_matrix_elements(const std::vector<OpMatrix>& ops, CouplingOrder order, int p, int q, int r);

/// <v^r_l, Q_k v^p_j> == CG * reduced for every (j, k, l), using the given
/// coupling order. Reports the number of nonzero residuals.
Report check_wigner_eckart(const std::vector<OpMatrix>& ops, CouplingOrder order, int p, int q, int r);

/// The factorized table CG * reduced (the right-hand side of the theorem).
std::vector<OpMatrix> factorized_ops(const QScalar& reduced, CouplingOrder order, int p, int q, int r);

}  // namespace qito
