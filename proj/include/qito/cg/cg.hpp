#pragma once

#include <vector>

#include "qito/corep/corep.hpp"
#include "qito/suq2/backend.hpp"
#include "qito/suq2/half_int.hpp"

namespace qito {

// All spins and magnetic numbers below are twice-values.

struct CgKey {
  int j1, m1, j2, m2, j, m;
  friend auto operator<=>(const CgKey&, const CgKey&) = default;
};

/// (j1 j2; m1 m2 | j m). Zero off the selection rules; DomainError when a
/// (j, m) pair has the wrong parity or |m| > j. Memoized.
///
/// Computed as
///   D(j1,j2,j) q^{(x(j1)+x(j2)-x(j)+2(j1 j2 + j1 m2 - j2 m1))/4}
///   sqrt([j1+m1]! [j1-m1]! [j2+m2]! [j2-m2]! [j+m]! [j-m]! [2j+1])
///   sum_a (-1)^a q^{-a(j1+j2+j+1)} / ([a]! [j1+j2-j-a]! [j1-m1-a]! [j2+m2-a]!
///                                    [j-j2+m1+a]! [j-j1-m2+a]!)
/// with x(a) = a(a+1). The q-power in the sum is the one that makes the
/// coefficients orthonormal.
QScalar cg(int j1, int m1, int j2, int m2, int j, int m);
inline QScalar cg(const CgKey& k) { return cg(k.j1, k.m1, k.j2, k.m2, k.j, k.m); }

/// Triangle and parity condition for j in j1 (x) j2.
bool triangle(int j1, int j2, int j);

/// Inverse coefficient (j m | j1 m1 j2 m2); the CG matrix is real orthogonal.
inline QScalar cg_inverse(int j, int m, int j1, int m1, int j2, int m2) { return cg(j1, m1, j2, m2, j, m); }

struct CoupledComponent {
  int m1, m2;
  QScalar value;
};
struct CoupledState {
  int j, m;
  std::vector<CoupledComponent> components;  // nonzero only
};

/// w^j_m = sum cg * v^{j1}_{m1} (x) v^{j2}_{m2} for every j in the series,
/// j ascending and m descending.
std::vector<CoupledState> couple(int j1, int j2);

/// sum_j cg(j1,mp1,j2,mp2 -> j,m') cg(j1,m1,j2,m2 -> j,m) pi^j_{m'm}.
AlgElem expand_product(int j1, int mp1, int m1, int j2, int mp2, int m2);

/// Closed forms for (j+1/2, m+1/2; j, -m | 1/2, 1/2) and
/// (j+1/2, m-1/2; j, -m | 1/2, -1/2), as printed and with the q-power that
/// agrees with cg().
QScalar half_top_printed(int j, int m);
QScalar half_top_corrected(int j, int m);
QScalar half_bottom_printed(int j, int m);
QScalar half_bottom_corrected(int j, int m);

// Reductions with a conjugate factor. With c_m = (-1)^{p-m} q^{-m}, the map
// bar v^p_m -> c_m v^p_{-m} intertwines bar(pi^p) with pi^p, so
//   RPBar       (r m_r, bar p m_p | q k) = c_{m_p} cg(r, m_r, p, -m_p -> q, k)
//   PBarR       (bar p m_p, r m_r | q k) = c_{m_p} cg(p, -m_p, r, m_r -> q, k)
//   PBarDaggerR (bar p'' m_p, r m_r | q k) = F^p_{m_p m_p} (PBarR value)
// The last follows from bar(pi^p'') = bar F bar(pi^p) bar F^-1.
enum class ConjVariant { RPBar, PBarR, PBarDaggerR };

/// Arguments follow the tensor-factor order: (a, ma) is the first factor.
QScalar cg_conjugate_label(ConjVariant v, int a, int ma, int b, int mb, int q, int k);

/// Matrix of the reduction of the ordinary product of (a, b) onto q: rows are
/// composite indices ia * dim(b) + ib, columns the index of q.
Matrix<QScalar> cg_matrix(int a, int b, int q);
Matrix<QScalar> cg_matrix(ConjVariant v, int a, int b, int q);

/// Checks sum_c product(row, c) C(c, j) = sum_k C(row, k) target(k, j).
template <HopfBackend H>
Report check_intertwiner(const H& h, const Corep<H>& product, const Matrix<QScalar>& C, const Corep<H>& target,
                         const std::string& name) {
  Report rep;
  rep.suite = "intertwiner";
  if (C.rows() != product.dim() || C.cols() != target.dim()) {
    rep.add(name, false, "shape mismatch");
    return rep;
  }
  std::size_t bad = 0;
  std::string first;
  for (int row = 0; row < product.dim(); ++row)
    for (int j = 0; j < target.dim(); ++j) {
      typename H::Elem lhs = h.zero(), rhs = h.zero();
      for (int c = 0; c < product.dim(); ++c)
        if (!C(c, j).is_zero()) lhs = lhs + product(row, c) * C(c, j);
      for (int k = 0; k < target.dim(); ++k)
        if (!C(row, k).is_zero()) rhs = rhs + target(k, j) * C(row, k);
      if (!(lhs == rhs)) {
        if (bad++ == 0) first = "entry (" + std::to_string(row) + "," + std::to_string(j) + "): " + h.text(lhs) + " vs " + h.text(rhs);
      }
    }
  rep.add(name, bad == 0, bad == 0 ? std::to_string(product.dim() * target.dim()) + " entries" : std::to_string(bad) + " mismatches, first " + first);
  return rep;
}

}  // namespace qito
