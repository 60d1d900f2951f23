#include "qito/ito/build.hpp"

#include "qito/cg/cg.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/suq2/coreps.hpp"

namespace qito {

namespace {
const Rational kNormalizationQ(3, 2);
}

void normalize_family(std::vector<OpMatrix>& ops) {
  const QScalar* best = nullptr;
  Real best_abs(Rational(0), bits_for_digits(30));
  for (const auto& Q : ops)
    for (int m = 0; m < Q.rows(); ++m)
      for (int i = 0; i < Q.cols(); ++i) {
        if (Q(m, i).is_zero()) continue;
        const Real v = abs(eval_numeric(Q(m, i), kNormalizationQ, 30));
        if (best == nullptr || best_abs < v) {
          best = &Q(m, i);
          best_abs = v;
        }
      }
  if (best == nullptr) return;
  const QScalar scale = QScalar(1) / *best;
  for (auto& Q : ops) Q = scale * Q;
}

std::vector<SuqFamily> build_ito(ItoKind kind, int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("negative spin");
  if (!triangle(p, q, r)) return {};
  SuqFamily f{kind, pi(q), {}, 1};
  for (int k = 0; k <= q; ++k) {
    const int mk = m_twice_of_index(q, k);
    OpMatrix Q(r + 1, p + 1);
    for (int l = 0; l <= r; ++l)
      for (int i = 0; i <= p; ++i) {
        const int ml = m_twice_of_index(r, l), mi = m_twice_of_index(p, i);
        Q(l, i) = kind == ItoKind::Ordinary ? cg_conjugate_label(ConjVariant::RPBar, r, ml, p, mi, q, mk)
                                             : cg_conjugate_label(ConjVariant::PBarDaggerR, p, mi, r, ml, q, mk);
      }
    f.ops.push_back(std::move(Q));
  }
  normalize_family(f.ops);
  return {f};
}

SuqFamily identity_family(ItoKind kind, int p) {
  const Suq2 h;
  return SuqFamily{kind, trivial_corep(h), {op_identity(p + 1)}, 1};
}

int numeric_rank(const std::vector<OpMatrix>& ops, const Rational& q, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  std::vector<std::vector<Real>> rows;
  for (const auto& Q : ops) {
    std::vector<Real> row;
    for (int m = 0; m < Q.rows(); ++m)
      for (int i = 0; i < Q.cols(); ++i) row.push_back(eval_numeric(Q(m, i), q, digits));
    rows.push_back(std::move(row));
  }
  const Real tol = decimal_epsilon(digits / 2, bits);
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (abs(rows[piv][c]) < abs(rows[r][c])) piv = r;
    if (abs(rows[piv][c]) <= tol) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Real f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qito
