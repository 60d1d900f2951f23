#pragma once

#include <string>
#include <vector>

#include "qito/corep/corep.hpp"

namespace qito {

enum class ItoKind { Ordinary, Twisted };

inline std::string to_string(ItoKind k) { return k == ItoKind::Ordinary ? "ordinary" : "twisted"; }

// Q^q_1 .. Q^q_{d_q}: operators V^p -> V^r transforming by q_corep.
template <HopfBackend H>
struct ItoFamily {
  ItoKind kind = ItoKind::Ordinary;
  Corep<H> qcorep;
  std::vector<OpMatrix> ops;
  int alpha = 1;
};

/// Element of L^{pr} (x) A in the projector basis: entry (m, j) is the algebra
/// leg of P^{pr}_{jm} (the unit operator at row m, column j).
template <HopfBackend H>
using OpTensor = Matrix<typename H::Elem>;

namespace detail {
inline std::string idx(int a) { return std::to_string(a); }
inline std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

template <HopfBackend H>
typename H::Elem twist_antipode(const H& h, ItoKind kind, const typename H::Elem& a) {
  return kind == ItoKind::Ordinary ? h.antipode(a) : h.antipode_inv(a);
}

// Leg product for one kind: ordinary r * S(p), twisted S^-1(p) * r.
template <HopfBackend H>
typename H::Elem leg(const H& h, ItoKind kind, const typename H::Elem& r, const typename H::Elem& sp) {
  return kind == ItoKind::Ordinary ? h.mul(r, sp) : h.mul(sp, r);
}
}  // namespace detail

/// Coaction on L^{pr}:
///   ordinary  sum q_{ni} P_{jm} (x) pi^r_{mn} S(pi^p_{ij})
///   twisted   sum q_{ni} P_{jm} (x) S^-1(pi^p_{ij}) pi^r_{mn}
template <HopfBackend H>
OpTensor<H> coaction_on_ops(const H& h, ItoKind kind, const Corep<H>& p, const Corep<H>& r, const OpMatrix& Q) {
  const int dp = p.dim(), dr = r.dim();
  if (Q.rows() != dr || Q.cols() != dp) throw DomainError("operator shape does not match d_r x d_p");
  OpTensor<H> out(dr, dp, h.zero());
  std::vector<std::vector<typename H::Elem>> sp(dp, std::vector<typename H::Elem>(dp, h.zero()));
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dp; ++j) sp[i][j] = detail::twist_antipode(h, kind, p(i, j));
  for (int n = 0; n < dr; ++n)
    for (int i = 0; i < dp; ++i) {
      if (Q(n, i).is_zero()) continue;
      for (int m = 0; m < dr; ++m)
        for (int j = 0; j < dp; ++j) out(m, j) = out(m, j) + detail::leg(h, kind, r(m, n), sp[i][j]) * Q(n, i);
    }
  return out;
}

/// Coaction on L^{pr} as a corepresentation of dimension d_p d_r on the
/// projector basis, P^{pr}_{ij} -> index i * d_r + j.
template <HopfBackend H>
Corep<H> operator_space_corep(const H& h, ItoKind kind, const Corep<H>& p, const Corep<H>& r) {
  const int dp = p.dim(), dr = r.dim();
  Matrix<typename H::Elem> m(dp * dr, dp * dr, h.zero());
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dr; ++j) {
      const auto legs = coaction_on_ops(h, kind, p, r, projector(dp, dr, i, j));
      for (int a = 0; a < dp; ++a)
        for (int b = 0; b < dr; ++b) m(a * dr + b, i * dr + j) = legs(b, a);
    }
  return {"L(" + p.label + "," + r.label + ")/" + to_string(kind), m};
}

/// The defining condition applied to one vector by composing the maps:
///   ordinary (id (x) M)(pi^r (x) id)(Q (x) S) pi^p (v^p_s)
///   twisted  (id (x) M)(id (x) sigma)(pi^r (x) id)(Q (x) S^-1) pi^p (v^p_s)
template <HopfBackend H>
VectorTensor<typename H::Elem> defining_lhs(const H& h, ItoKind kind, const Corep<H>& p, const Corep<H>& r,
                                            const OpMatrix& Q, int s) {
  const auto pv = coaction_apply(h, p, s);
  VectorTensor<typename H::Elem> after;
  for (const auto& [i, a] : pv.legs) {
    const auto sa = detail::twist_antipode(h, kind, a);
    for (int n = 0; n < r.dim(); ++n)
      if (!Q(n, i).is_zero()) after.add(n, sa * Q(n, i));
  }
  VectorTensor<typename H::Tensor> three;
  for (const auto& [n, b] : after.legs)
    for (int m = 0; m < r.dim(); ++m) {
      const auto t = h.outer(r(m, n), b);
      auto [it, inserted] = three.legs.try_emplace(m, t);
      if (!inserted) it->second = it->second + t;
    }
  VectorTensor<typename H::Elem> out;
  for (const auto& [m, t] : three.legs) out.add(m, h.mult(kind == ItoKind::Ordinary ? t : h.flip(t)));
  return out;
}

/// sum_k Q_k(v^p_s) (x) pi^q_{kj}.
template <HopfBackend H>
VectorTensor<typename H::Elem> defining_rhs(const H& h, const ItoFamily<H>& f, int s, int j) {
  VectorTensor<typename H::Elem> out;
  for (int k = 0; k < f.qcorep.dim(); ++k)
    for (int m = 0; m < f.ops[k].rows(); ++m)
      if (!f.ops[k](m, s).is_zero()) out.add(m, f.qcorep(k, j) * f.ops[k](m, s));
  (void)h;
  return out;
}

/// As is_ito but testing the condition of `kind` regardless of f.kind.
template <HopfBackend H>
Report is_ito_as(const H& h, const ItoFamily<H>& f, ItoKind kind, const Corep<H>& p, const Corep<H>& r) {
  Report rep;
  rep.suite = "ito";
  const std::string tag = to_string(kind) + " " + f.qcorep.label + " " + p.label + "->" + r.label;
  if (static_cast<int>(f.ops.size()) != f.qcorep.dim()) {
    rep.add(tag + " shape", false, "family size differs from the dimension of its corepresentation");
    return rep;
  }
  for (const auto& Q : f.ops)
    if (Q.rows() != r.dim() || Q.cols() != p.dim()) {
      rep.add(tag + " shape", false, "operator shape does not match d_r x d_p");
      return rep;
    }
  std::size_t bad_ops = 0, bad_vec = 0;
  std::string first_ops, first_vec;
  for (int j = 0; j < f.qcorep.dim(); ++j) {
    const auto lhs = coaction_on_ops(h, kind, p, r, f.ops[j]);
    for (int m = 0; m < r.dim(); ++m)
      for (int i = 0; i < p.dim(); ++i) {
        typename H::Elem rhs = h.zero();
        for (int k = 0; k < f.qcorep.dim(); ++k)
          if (!f.ops[k](m, i).is_zero()) rhs = rhs + f.qcorep(k, j) * f.ops[k](m, i);
        if (!(lhs(m, i) == rhs) && bad_ops++ == 0)
          first_ops = "component " + detail::idx(j) + " leg " + detail::idx(m, i) + ": " + h.text(lhs(m, i)) + " vs " + h.text(rhs);
      }
    for (int s = 0; s < p.dim(); ++s)
      if (defining_lhs(h, kind, p, r, f.ops[j], s) != defining_rhs(h, f, s, j) && bad_vec++ == 0)
        first_vec = "component " + detail::idx(j) + " on basis vector " + detail::idx(s);
  }
  const std::string n = std::to_string(f.qcorep.dim());
  rep.add(tag + " operator-space", bad_ops == 0, bad_ops == 0 ? n + " components" : std::to_string(bad_ops) + " legs differ, first " + first_ops);
  rep.add(tag + " vector", bad_vec == 0, bad_vec == 0 ? n + " components" : std::to_string(bad_vec) + " vectors differ, first " + first_vec);
  return rep;
}

/// Both forms of the defining condition for the family's kind: on the operator
/// space, coaction(Q_j) = sum_k Q_k (x) pi^q_{kj}; and on every basis vector of
/// V^p. The two must agree.
template <HopfBackend H>
Report is_ito(const H& h, const ItoFamily<H>& f, const Corep<H>& p, const Corep<H>& r) {
  return is_ito_as(h, f, f.kind, p, r);
}

/// The same family on V = V^p (+) V^r with block operators, checked on every
/// vector of V.
template <HopfBackend H>
Report is_ito_extended(const H& h, const ItoFamily<H>& f, const Corep<H>& p, const Corep<H>& r) {
  const Corep<H> big = direct_sum(h, p, r);
  const int dp = p.dim(), n = big.dim();
  ItoFamily<H> g{f.kind, f.qcorep, {}, f.alpha};
  for (const auto& Q : f.ops) {
    OpMatrix B(n, n);
    for (int m = 0; m < Q.rows(); ++m)
      for (int i = 0; i < Q.cols(); ++i) B(dp + m, i) = Q(m, i);
    g.ops.push_back(std::move(B));
  }
  Report rep;
  rep.suite = "ito-extended";
  std::size_t bad = 0;
  for (int j = 0; j < f.qcorep.dim(); ++j)
    for (int s = 0; s < n; ++s)
      if (defining_lhs(h, f.kind, big, big, g.ops[j], s) != defining_rhs(h, g, s, j)) ++bad;
  rep.add(to_string(f.kind) + " " + f.qcorep.label + " on " + big.label, bad == 0,
          bad == 0 ? std::to_string(n) + " vectors" : std::to_string(bad) + " vector conditions fail");
  return rep;
}

/// Transformation of Q_k(v^p_j) under pi^r:
///   ordinary  sum_{s,t} Q_t(v^p_s) (x) pi^q_{tk} pi^p_{sj}
///   twisted   sum_{s,t} Q_t(v^p_s) (x) pi^p_{sj} pi^q_{tk}
/// `kind` selects the factor order.
template <HopfBackend H>
Report ito_identities(const H& h, const ItoFamily<H>& f, ItoKind kind, const Corep<H>& p, const Corep<H>& r) {
  Report rep;
  rep.suite = "ito-identities";
  std::size_t bad = 0;
  std::string first;
  for (int k = 0; k < f.qcorep.dim(); ++k)
    for (int j = 0; j < p.dim(); ++j) {
      VectorTensor<typename H::Elem> lhs, rhs;
      for (int n = 0; n < r.dim(); ++n)
        if (!f.ops[k](n, j).is_zero())
          for (int m = 0; m < r.dim(); ++m) lhs.add(m, r(m, n) * f.ops[k](n, j));
      for (int t = 0; t < f.qcorep.dim(); ++t)
        for (int s = 0; s < p.dim(); ++s) {
          const auto a = kind == ItoKind::Ordinary ? h.mul(f.qcorep(t, k), p(s, j)) : h.mul(p(s, j), f.qcorep(t, k));
          for (int m = 0; m < r.dim(); ++m)
            if (!f.ops[t](m, s).is_zero()) rhs.add(m, a * f.ops[t](m, s));
        }
      if (lhs != rhs && bad++ == 0) first = "component " + detail::idx(k) + " on basis vector " + detail::idx(j);
    }
  rep.add(to_string(kind) + " transformation " + f.qcorep.label + " " + p.label + "->" + r.label, bad == 0,
          bad == 0 ? "all components" : std::to_string(bad) + " failures, first " + first);
  return rep;
}

/// Legs of both coactions on projectors against the tensor-product
/// corepresentations they are identified with:
///   ordinary on P_{ij}, leg of P_{mn}: (pi^r [x] bar pi^p)_{nm,ji} = (bar pi^p [x]~ pi^r)_{mn,ij}
///   twisted  on P_{ij}, leg of P_{mn}: (bar pi^p'' [x] pi^r)_{mn,ij}
template <HopfBackend H>
Report check_identifications(const H& h, const Corep<H>& p, const Corep<H>& r) {
  Report rep;
  rep.suite = "identifications";
  const int dp = p.dim(), dr = r.dim();
  const Corep<H> pbar = conjugate(h, p);
  const Corep<H> ord = tensor_ordinary(h, r, pbar);
  const Corep<H> tw = tensor_twisted(h, pbar, r);
  const Corep<H> dd = tensor_ordinary(h, conjugate(h, double_contragredient(h, p)), r);
  std::size_t bad_a = 0, bad_c = 0, bad_c2 = 0;
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dr; ++j) {
      const auto lo = coaction_on_ops(h, ItoKind::Ordinary, p, r, projector(dp, dr, i, j));
      const auto lt = coaction_on_ops(h, ItoKind::Twisted, p, r, projector(dp, dr, i, j));
      for (int m = 0; m < dp; ++m)
        for (int n = 0; n < dr; ++n) {
          if (!(lo(n, m) == ord(n * dp + m, j * dp + i))) ++bad_a;
          if (!(lo(n, m) == tw(m * dr + n, i * dr + j))) ++bad_c;
          if (!(lt(n, m) == dd(m * dr + n, i * dr + j))) ++bad_c2;
        }
    }
  const std::string tag = p.label + "," + r.label;
  auto detail = [](std::size_t bad) { return bad == 0 ? std::string("all legs") : std::to_string(bad) + " legs differ"; };
  rep.add("ordinary = r x bar p " + tag, bad_a == 0, detail(bad_a));
  rep.add("ordinary = bar p x~ r " + tag, bad_c == 0, detail(bad_c));
  rep.add("twisted = bar p'' x r " + tag, bad_c2 == 0, detail(bad_c2));
  return rep;
}

}  // namespace qito
