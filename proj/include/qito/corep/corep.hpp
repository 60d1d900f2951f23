#pragma once

#include <map>
#include <string>

#include "qito/corep/backend.hpp"
#include "qito/corep/matrix.hpp"
#include "qito/report.hpp"

namespace qito {

// Finite-dimensional corepresentation: pi(v_j) = sum_k v_k (x) coeffs(k, j).
template <HopfBackend H>
struct Corep {
  std::string label;
  Matrix<typename H::Elem> coeffs;

  int dim() const { return coeffs.rows(); }
  const typename H::Elem& operator()(int j, int k) const { return coeffs(j, k); }
};

// Element of V (x) L for a leg type L (an algebra element or a tensor):
// basis index -> leg, zero legs dropped.
template <class Leg>
struct VectorTensor {
  std::map<int, Leg> legs;

  void add(int index, const Leg& leg) {
    auto [it, inserted] = legs.try_emplace(index, leg);
    if (!inserted) it->second = it->second + leg;
    if (it->second == Leg()) legs.erase(it);
  }
  friend bool operator==(const VectorTensor& a, const VectorTensor& b) { return a.legs == b.legs; }
  friend bool operator!=(const VectorTensor& a, const VectorTensor& b) { return !(a == b); }
};

template <HopfBackend H>
Corep<H> trivial_corep(const H& h) {
  Matrix<typename H::Elem> m(1, 1, h.one());
  return {"trivial", m};
}

/// pi(v_index) = sum_k v_k (x) coeffs(k, index).
template <HopfBackend H>
VectorTensor<typename H::Elem> coaction_apply(const H&, const Corep<H>& c, int index) {
  if (index < 0 || index >= c.dim()) throw DomainError("basis index out of range");
  VectorTensor<typename H::Elem> out;
  for (int k = 0; k < c.dim(); ++k) out.add(k, c(k, index));
  return out;
}

/// D(pi_jk) = sum_l pi_jl (x) pi_lk and e(pi_jk) = delta_jk, entrywise.
template <HopfBackend H>
Report check_comodule(const H& h, const Corep<H>& c) {
  Report rep;
  rep.suite = "comodule";
  const int d = c.dim();
  bool all_ok = true;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      typename H::Tensor rhs;
      for (int l = 0; l < d; ++l) rhs = rhs + h.outer(c(j, l), c(l, k));
      const bool co = h.coproduct(c(j, k)) == rhs;
      const bool cu = h.counit(c(j, k)) == QScalar(j == k ? 1 : 0);
      const std::string where = c.label + "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      if (!co) rep.add("coproduct " + where, false, "coproduct of the entry is not the row-column sum");
      if (!cu) rep.add("counit " + where, false, "counit of the entry is not delta");
      all_ok = all_ok && co && cu;
    }
  if (all_ok) rep.add("comodule " + c.label, true, std::to_string(d * d) + " entries");
  return rep;
}

/// (pi^p [x] pi^q)_{st,jk} = M(pi^p_sj (x) pi^q_tk); index (s,t) -> s*d_q + t.
template <HopfBackend H>
Corep<H> tensor_ordinary(const H& h, const Corep<H>& p, const Corep<H>& q) {
  const int dp = p.dim(), dq = q.dim();
  Matrix<typename H::Elem> m(dp * dq, dp * dq, h.zero());
  for (int s = 0; s < dp; ++s)
    for (int t = 0; t < dq; ++t)
      for (int j = 0; j < dp; ++j)
        for (int k = 0; k < dq; ++k) m(s * dq + t, j * dq + k) = h.mul(p(s, j), q(t, k));
  return {"(" + p.label + " x " + q.label + ")", m};
}

/// Twisted product: entries M(pi^q_tk (x) pi^p_sj).
template <HopfBackend H>
Corep<H> tensor_twisted(const H& h, const Corep<H>& p, const Corep<H>& q) {
  const int dp = p.dim(), dq = q.dim();
  Matrix<typename H::Elem> m(dp * dq, dp * dq, h.zero());
  for (int s = 0; s < dp; ++s)
    for (int t = 0; t < dq; ++t)
      for (int j = 0; j < dp; ++j)
        for (int k = 0; k < dq; ++k) m(s * dq + t, j * dq + k) = h.mul(q(t, k), p(s, j));
  return {"(" + p.label + " x~ " + q.label + ")", m};
}

template <HopfBackend H, class F>
Corep<H> map_entries(const Corep<H>& c, std::string label, F&& f) {
  Matrix<typename H::Elem> m = c.coeffs;
  for (int j = 0; j < c.dim(); ++j)
    for (int k = 0; k < c.dim(); ++k) m(j, k) = f(c(j, k));
  return {std::move(label), m};
}

/// Entrywise star.
template <HopfBackend H>
Corep<H> conjugate(const H& h, const Corep<H>& c) {
  return map_entries(c, "bar(" + c.label + ")", [&](const auto& x) { return h.star(x); });
}

/// Entrywise S^2.
template <HopfBackend H>
Corep<H> double_contragredient(const H& h, const Corep<H>& c) {
  return map_entries(c, c.label + "''", [&](const auto& x) { return h.antipode(h.antipode(x)); });
}

/// Block-diagonal sum; the second block's indices follow the first's.
template <HopfBackend H>
Corep<H> direct_sum(const H& h, const Corep<H>& a, const Corep<H>& b) {
  const int da = a.dim(), db = b.dim();
  Matrix<typename H::Elem> m(da + db, da + db, h.zero());
  for (int j = 0; j < da; ++j)
    for (int k = 0; k < da; ++k) m(j, k) = a(j, k);
  for (int j = 0; j < db; ++j)
    for (int k = 0; k < db; ++k) m(da + j, da + k) = b(j, k);
  return {"(" + a.label + " + " + b.label + ")", m};
}

}  // namespace qito
