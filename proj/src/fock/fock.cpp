#include "qito/fock/fock.hpp"

#include "qito/cg/cg.hpp"
#include "qito/errors.hpp"
#include "qito/scalar/numeric.hpp"
#include "qito/scalar/text.hpp"
#include "qito/suq2/coreps.hpp"

namespace qito {

namespace {

void add_image(std::vector<std::pair<FockState, QScalar>>& v, const FockState& s, const QScalar& c) {
  if (c.is_zero()) return;
  for (auto it = v.begin(); it != v.end(); ++it)
    if (it->first == s) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
      return;
    }
  v.emplace_back(s, c);
}

template <class F>
FockOperator diagonal_like(int n_max, F&& f) {
  FockOperator op;
  op.n_max = n_max;
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
      const FockState s{n1, n2};
      auto [target, coeff] = f(s);
      if (target.n1 < 0 || target.n2 < 0) {
        op.images[s];
        continue;
      }
      if (target.n1 + target.n2 > n_max) {
        op.clipped.insert(s);
        continue;
      }
      auto& v = op.images[s];
      add_image(v, target, coeff);
    }
  return op;
}

FockOperator combine(const FockOperator& a, const FockOperator& b, int sign) {
  if (a.n_max != b.n_max) throw DomainError("Fock operators with different truncations");
  FockOperator out;
  out.n_max = a.n_max;
  out.clipped = a.clipped;
  out.clipped.insert(b.clipped.begin(), b.clipped.end());
  for (const auto* op : {&a, &b})
    for (const auto& [s, imgs] : op->images) {
      if (out.clipped.count(s)) continue;
      auto& v = out.images[s];
      for (const auto& [t, c] : imgs) add_image(v, t, op == &b && sign < 0 ? -c : c);
    }
  return out;
}

}  // namespace

std::vector<std::pair<FockState, QScalar>> FockOperator::apply(const FockState& s) const {
  if (clipped.count(s)) throw DomainError("Fock image leaves the truncation");
  auto it = images.find(s);
  if (it == images.end()) throw DomainError("Fock state outside the truncation");
  return it->second;
}

FockOperator boson(BosonOp op, int n_max) {
  return diagonal_like(n_max, [op](const FockState& s) -> std::pair<FockState, QScalar> {
    switch (op) {
      case BosonOp::Create1: return {{s.n1 + 1, s.n2}, sqrt(q_int(s.n1 + 1))};
      case BosonOp::Create2: return {{s.n1, s.n2 + 1}, sqrt(q_int(s.n2 + 1))};
      case BosonOp::Annih1: return {{s.n1 - 1, s.n2}, s.n1 == 0 ? QScalar() : sqrt(q_int(s.n1))};
      case BosonOp::Annih2: return {{s.n1, s.n2 - 1}, s.n2 == 0 ? QScalar() : sqrt(q_int(s.n2))};
      case BosonOp::Number1: return {s, QScalar(s.n1)};
      case BosonOp::Number2: return {s, QScalar(s.n2)};
    }
    throw DomainError("unknown boson operator");
  });
}

FockOperator q_power_number(int mode, int power, int n_max) {
  if (mode != 1 && mode != 2) throw DomainError("boson mode must be 1 or 2");
  return diagonal_like(n_max, [=](const FockState& s) -> std::pair<FockState, QScalar> {
    return {s, QScalar::t_power(power * (mode == 1 ? s.n1 : s.n2))};
  });
}

FockOperator scalar_operator(const QScalar& c, int n_max) {
  return diagonal_like(n_max, [&](const FockState& s) -> std::pair<FockState, QScalar> { return {s, c}; });
}

FockOperator compose(const FockOperator& a, const FockOperator& b) {
  if (a.n_max != b.n_max) throw DomainError("Fock operators with different truncations");
  FockOperator out;
  out.n_max = a.n_max;
  out.clipped = b.clipped;
  for (const auto& [s, imgs] : b.images) {
    bool clip = false;
    std::vector<std::pair<FockState, QScalar>> v;
    for (const auto& [u, c] : imgs) {
      if (a.clipped.count(u)) {
        clip = true;
        break;
      }
      for (const auto& [w, d] : a.images.at(u)) add_image(v, w, c * d);
    }
    if (clip)
      out.clipped.insert(s);
    else
      out.images[s] = std::move(v);
  }
  return out;
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) { return combine(a, b, 1); }
FockOperator operator-(const FockOperator& a, const FockOperator& b) { return combine(a, b, -1); }

bool same_on_unclipped(const FockOperator& a, const FockOperator& b) {
  const FockOperator d = a - b;
  for (const auto& [s, v] : d.images)
    if (!v.empty()) return false;
  return true;
}

const std::vector<CandidateVariant>& candidate_variants() {
  using F = FockFactor;
  static const std::vector<CandidateVariant> v = {
      {"raise_ordinary", ItoKind::Ordinary, +1,
       {F{F::Create, 1, 0, {}}, F{F::QPowN, 2, -1, {}}},
       {F{F::Create, 2, 0, {}}, F{F::QPowN, 1, 1, {}}}},
      {"lower_ordinary", ItoKind::Ordinary, -1,
       {F{F::Scalar, 0, 0, QScalar::t_power(2)}, F{F::Annih, 2, 0, {}}, F{F::QPowN, 1, 1, {}}},
       {F{F::Scalar, 0, 0, QScalar(-1)}, F{F::Annih, 1, 0, {}}, F{F::QPowN, 2, -1, {}}}},
      {"raise_twisted", ItoKind::Twisted, +1,
       {F{F::Create, 1, 0, {}}, F{F::QPowN, 2, 1, {}}},
       {F{F::Create, 2, 0, {}}, F{F::QPowN, 1, -1, {}}}},
      {"lower_twisted", ItoKind::Twisted, -1,
       {F{F::Scalar, 0, 0, QScalar::t_power(-2)}, F{F::Annih, 2, 0, {}}, F{F::QPowN, 1, -1, {}}},
       {F{F::Scalar, 0, 0, QScalar(-1)}, F{F::Annih, 1, 0, {}}, F{F::QPowN, 2, 1, {}}}},
  };
  return v;
}

const CandidateVariant& candidate_variant(const std::string& name) {
  for (const auto& v : candidate_variants())
    if (v.name == name) return v;
  throw DomainError("unknown boson variant: " + name);
}

FockOperator realize(const FockWord& w, int n_max) {
  FockOperator out = scalar_operator(QScalar(1), n_max);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    FockOperator f;
    switch (it->kind) {
      case FockFactor::Create: f = boson(it->mode == 1 ? BosonOp::Create1 : BosonOp::Create2, n_max); break;
      case FockFactor::Annih: f = boson(it->mode == 1 ? BosonOp::Annih1 : BosonOp::Annih2, n_max); break;
      case FockFactor::QPowN: f = q_power_number(it->mode, it->power, n_max); break;
      case FockFactor::Scalar: f = scalar_operator(it->scalar, n_max); break;
    }
    out = compose(f, out);
  }
  return out;
}

int big_index(const FockState& s) {
  const int j = s.n1 + s.n2;
  return j * (j + 1) / 2 + s.n2;
}

FockState big_state(int index) {
  int j = 0;
  while ((j + 1) * (j + 2) / 2 <= index) ++j;
  const int n2 = index - j * (j + 1) / 2;
  return {j - n2, n2};
}

Corep<Suq2> big_coaction(int jmax) {
  if (jmax < 0) throw DomainError("negative jmax");
  const Suq2 h;
  Corep<Suq2> c = pi(0);
  for (int j = 1; j <= jmax; ++j) c = direct_sum(h, c, pi(j));
  c.label = "V(2j<=" + std::to_string(jmax) + ")";
  return c;
}

OpMatrix big_matrix(const FockOperator& op, int jmax) {
  const int d = (jmax + 1) * (jmax + 2) / 2;
  OpMatrix m(d, d);
  for (const auto& [s, imgs] : op.images) {
    if (s.n1 + s.n2 > jmax) continue;
    for (const auto& [t, c] : imgs) {
      if (t.n1 + t.n2 > jmax) throw DomainError("image outside the requested blocks");
      m(big_index(t), big_index(s)) = c;
    }
  }
  return m;
}

Report verify_boson_ito(const CandidateVariant& v, ItoKind kind, int jmax, std::optional<Rational> numeric_q, int digits) {
  if (jmax < 2) throw DomainError("truncation too small: need 2j_max >= 2");
  const Suq2 h;
  const Corep<Suq2> big = big_coaction(jmax);
  // Sources with 2j <= jmax - 1 only.
  const int n_src = jmax * (jmax + 1) / 2;
  ItoFamily<Suq2> fam{kind, pi(1), {}, 1};
  for (const FockWord* w : {&v.top, &v.bottom}) {
    const FockOperator op = realize(*w, jmax);
    OpMatrix m = big_matrix(op, jmax);
    for (int col = n_src; col < m.cols(); ++col)
      for (int row = 0; row < m.rows(); ++row) m(row, col) = QScalar();
    fam.ops.push_back(std::move(m));
  }
  Report rep;
  rep.suite = "boson";
  rep.q_symbolic = !numeric_q.has_value();
  std::size_t bad = 0, checked = 0;
  std::string first;
  for (int k = 0; k < 2; ++k)
    for (int s = 0; s < n_src; ++s) {
      ++checked;
      const auto lhs = defining_lhs(h, kind, big, big, fam.ops[k], s);
      const auto rhs = defining_rhs(h, fam, s, k);
      bool ok = true;
      if (!numeric_q) {
        ok = lhs == rhs;
      } else {
        VectorTensor<AlgElem> diff = lhs;
        for (const auto& [i, a] : rhs.legs) diff.add(i, -a);
        const Real tol = decimal_epsilon(digits - 5, bits_for_digits(digits));
        for (const auto& [i, a] : diff.legs)
          for (const auto& [mono, c] : a.terms())
            if (tol < abs(eval_numeric(c, *numeric_q, digits))) ok = false;
      }
      if (!ok && bad++ == 0) {
        const FockState st = big_state(s);
        first = "component " + std::to_string(k) + " on |" + std::to_string(st.n1) + "," + std::to_string(st.n2) + ">";
      }
    }
  std::string name = v.name + " as " + to_string(kind);
  if (numeric_q) name += " at q=" + numeric_q->get_str();
  rep.add(name, bad == 0,
          bad == 0 ? std::to_string(checked) + " vector conditions" : std::to_string(bad) + " of " + std::to_string(checked) + " fail, first " + first);
  return rep;
}

std::vector<OpMatrix> block_family(const CandidateVariant& v, int j) {
  const int r = j + v.shift;
  if (r < 0) throw DomainError("target block has negative spin");
  const int n_max = std::max(j, r);
  std::vector<OpMatrix> out;
  for (const FockWord* w : {&v.top, &v.bottom}) {
    const FockOperator op = realize(*w, n_max);
    OpMatrix m(r + 1, j + 1);
    for (int i = 0; i <= j; ++i) {
      const FockState s{j - i, i};
      for (const auto& [t, c] : op.apply(s)) {
        if (t.n1 + t.n2 != r) throw DomainError("candidate does not map block 2j to 2j+shift");
        m(t.n2, i) = c;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

Report orthogonality_collapse(int jmax) {
  Report rep;
  rep.suite = "collapse";
  for (int j = 0; j <= jmax; ++j)
    for (int jp = 1; jp <= 2 * j + 1; jp += 2) {
      QScalar sum;
      for (int mp = j; mp >= -j; mp -= 2) sum += cg(j + 1, mp + 1, j, -mp, 1, 1) * cg(j + 1, mp + 1, j, -mp, jp, 1);
      const QScalar expected(jp == 1 ? 1 : 0);
      rep.add("j=" + HalfInt{j}.to_string() + " j'=" + HalfInt{jp}.to_string(), sum == expected, to_text(sum));
    }
  return rep;
}

}  // namespace qito
