#include "qito/wigner/wigner.hpp"

#include "qito/cg/cg.hpp"
#include "qito/scalar/text.hpp"
#include "qito/suq2/dfun.hpp"

namespace qito {

namespace {

QScalar coupling(CouplingOrder order, int p, int s, int q, int t, int r, int u) {
  return order == CouplingOrder::Ordinary ? cg(q, t, p, s, r, u) : cg(p, s, q, t, r, u);
}

void require_shape(const std::vector<OpMatrix>& ops, int p, int q, int r) {
  if (static_cast<int>(ops.size()) != q + 1) throw DomainError("family size differs from 2q+1");
  for (const auto& Q : ops)
    if (Q.rows() != r + 1 || Q.cols() != p + 1) throw DomainError("operator shape does not match d_r x d_p");
}

}  // namespace

std::vector<QScalar> reduced_matrix_elements(const std::vector<OpMatrix>& ops, CouplingOrder order, int p, int q, int r) {
  require_shape(ops, p, q, r);
  if (!triangle(q, p, r)) return {};
  QScalar sum;
  for (int t = 0; t <= q; ++t)
    for (int s = 0; s <= p; ++s)
      for (int u = 0; u <= r; ++u) {
        const QScalar& e = ops[t](u, s);
        if (e.is_zero()) continue;
        const QScalar c = coupling(order, p, m_twice_of_index(p, s), q, m_twice_of_index(q, t), r, m_twice_of_index(r, u));
        if (!c.is_zero()) sum += e * c * QScalar::t_power(4 * u);
      }
  return {sum / f_inv_trace(r)};
}

std::vector<OpMatrix> factorized_ops(const QScalar& reduced, CouplingOrder order, int p, int q, int r) {
  std::vector<OpMatrix> out;
  for (int k = 0; k <= q; ++k) {
    OpMatrix Q(r + 1, p + 1);
    for (int l = 0; l <= r; ++l)
      for (int j = 0; j <= p; ++j)
        Q(l, j) = reduced * coupling(order, p, m_twice_of_index(p, j), q, m_twice_of_index(q, k), r, m_twice_of_index(r, l));
    out.push_back(std::move(Q));
  }
  return out;
}

Report check_wigner_eckart(const std::vector<OpMatrix>& ops, CouplingOrder order, int p, int q, int r) {
  Report rep;
  rep.suite = "wigner-eckart";
  const auto reduced = reduced_matrix_elements(ops, order, p, q, r);
  const std::vector<OpMatrix> expected =
      reduced.empty() ? std::vector<OpMatrix>(q + 1, OpMatrix(r + 1, p + 1)) : factorized_ops(reduced[0], order, p, q, r);
  std::size_t bad = 0;
  std::string first;
  for (int k = 0; k <= q; ++k)
    for (int l = 0; l <= r; ++l)
      for (int j = 0; j <= p; ++j)
        if (ops[k](l, j) != expected[k](l, j) && bad++ == 0)
          first = "(j,k,l)=(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ") residual " +
                  to_text(ops[k](l, j) - expected[k](l, j));
  const std::string tag = to_string(order) + " order p=" + HalfInt{p}.to_string() + " q=" + HalfInt{q}.to_string() +
                          " r=" + HalfInt{r}.to_string();
  const int total = (p + 1) * (q + 1) * (r + 1);
  rep.add(tag, bad == 0,
          bad == 0 ? std::to_string(total) + " entries factorize" : std::to_string(bad) + " of " + std::to_string(total) + " entries have nonzero residual, first " + first);
  return rep;
}

}  // namespace qito
