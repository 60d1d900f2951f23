#include "qito/classical/classical.hpp"

#include <fstream>

#include "qito/errors.hpp"
#include "qito/scalar/text.hpp"

namespace qito {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> names)
    : mul_(std::move(mul)), names_(std::move(names)) {
  const int n = order();
  if (n == 0) throw DomainError("empty group table");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw DomainError("group table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("group table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw DomainError("group element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw DomainError("group table is not associative");
  if (names_.empty())
    for (int a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
  if (static_cast<int>(names_.size()) != n) throw DomainError("group names do not match the order");
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  try {
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(mul.size()))
      throw DomainError("group order does not match the table");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup(std::move(mul), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad group table: ") + e.what());
  }
}

FiniteGroup FiniteGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open group table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad group table: ") + e.what());
  }
  return from_json(j);
}

namespace {
const std::vector<std::vector<int>>& s3_perms() {
  static const std::vector<std::vector<int>> p = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return p;
}
}  // namespace

std::vector<int> s3_permutation(int index) { return s3_perms().at(index); }

FiniteGroup symmetric_group_s3() {
  const auto& p = s3_perms();
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = p[a][p[b][i]];
      for (int k = 0; k < 6; ++k)
        if (p[k] == c) mul[a][b] = k;
    }
  return FiniteGroup(mul, {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "a^" + std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  if (n == 2) names[1] = "a";
  return FiniteGroup(mul, names);
}

FnElem FnElem::delta(int g, const QScalar& c) {
  FnElem f;
  if (!c.is_zero()) f.values[g] = c;
  return f;
}

QScalar FnElem::at(int g) const {
  auto it = values.find(g);
  return it == values.end() ? QScalar() : it->second;
}

namespace {
template <class K>
void add_value(std::map<K, QScalar>& m, const K& k, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}
}  // namespace

FnElem operator+(const FnElem& a, const FnElem& b) {
  FnElem out = a;
  for (const auto& [g, c] : b.values) add_value(out.values, g, c);
  return out;
}

FnElem operator-(const FnElem& a, const FnElem& b) {
  FnElem out = a;
  for (const auto& [g, c] : b.values) add_value(out.values, g, -c);
  return out;
}

FnElem operator*(const FnElem& a, const QScalar& s) {
  FnElem out;
  if (s.is_zero()) return out;
  for (const auto& [g, c] : a.values) add_value(out.values, g, c * s);
  return out;
}

FnTensor operator+(const FnTensor& a, const FnTensor& b) {
  FnTensor out = a;
  for (const auto& [k, c] : b.values) add_value(out.values, k, c);
  return out;
}

FnElem FunAlg::one() const { return scalar(QScalar(1)); }

FnElem FunAlg::scalar(const QScalar& s) const {
  FnElem f;
  if (s.is_zero()) return f;
  for (int g = 0; g < group->order(); ++g) f.values[g] = s;
  return f;
}

FnElem FunAlg::mul(const FnElem& a, const FnElem& b) const {
  FnElem out;
  for (const auto& [g, c] : a.values) add_value(out.values, g, c * b.at(g));
  return out;
}

FnTensor FunAlg::coproduct(const FnElem& a) const {
  FnTensor out;
  const int n = group->order();
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) add_value(out.values, {h, k}, a.at(group->mul(h, k)));
  return out;
}

FnTensor FunAlg::outer(const FnElem& a, const FnElem& b) const {
  FnTensor out;
  for (const auto& [h, c] : a.values)
    for (const auto& [k, d] : b.values) add_value(out.values, {h, k}, c * d);
  return out;
}

FnElem FunAlg::mult(const FnTensor& t) const {
  FnElem out;
  for (const auto& [hk, c] : t.values)
    if (hk.first == hk.second) add_value(out.values, hk.first, c);
  return out;
}

FnTensor FunAlg::flip(const FnTensor& t) const {
  FnTensor out;
  for (const auto& [hk, c] : t.values) out.values[{hk.second, hk.first}] = c;
  return out;
}

FnElem FunAlg::antipode(const FnElem& a) const {
  FnElem out;
  for (const auto& [g, c] : a.values) out.values[group->inv(g)] = c;
  return out;
}

std::string FunAlg::text(const FnElem& a) const {
  if (a.values.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : a.values) {
    if (!s.empty()) s += " + ";
    s += "(" + to_text(c) + ")*d[" + group->name(g) + "]";
  }
  return s;
}

QScalar FunAlg::haar(const FnElem& a) const {
  QScalar sum;
  for (const auto& [g, c] : a.values) sum += c;
  return sum / QScalar(group->order());
}

GroupRep trivial_rep(const FiniteGroup& g) {
  return {"trivial", std::vector<OpMatrix>(g.order(), OpMatrix(1, 1, QScalar(1)))};
}

GroupRep s3_sign_rep() {
  GroupRep r{"sign", {}};
  for (int a = 0; a < 6; ++a) r.mats.emplace_back(1, 1, QScalar(a >= 1 && a <= 3 ? -1 : 1));
  return r;
}

GroupRep s3_standard_rep() {
  // Basis vectors scaled to integers: u1 = (1,-1,0), u2 = (1,1,-2), with
  // |u1|^2 = 2 and |u2|^2 = 6.
  const int u[2][3] = {{1, -1, 0}, {1, 1, -2}};
  const QScalar norm[2] = {sqrt(QScalar(2)), sqrt(QScalar(6))};
  GroupRep r{"standard", {}};
  for (int a = 0; a < 6; ++a) {
    const auto p = s3_permutation(a);
    OpMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        // <u_i, P u_k> with (P u)_{p(l)} = u_l.
        int dot = 0;
        for (int l = 0; l < 3; ++l) dot += u[i][p[l]] * u[k][l];
        m(i, k) = QScalar(dot) / (norm[i] * norm[k]);
      }
    r.mats.push_back(std::move(m));
  }
  return r;
}

GroupRep direct_sum(const GroupRep& a, const GroupRep& b) {
  if (a.mats.size() != b.mats.size()) throw DomainError("representations of different groups");
  const int da = a.dim(), db = b.dim();
  GroupRep out{"(" + a.label + " + " + b.label + ")", {}};
  for (std::size_t x = 0; x < a.mats.size(); ++x) {
    OpMatrix m(da + db, da + db);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k) m(i, k) = a.mats[x](i, k);
    for (int i = 0; i < db; ++i)
      for (int k = 0; k < db; ++k) m(da + i, da + k) = b.mats[x](i, k);
    out.mats.push_back(std::move(m));
  }
  return out;
}

GroupRep tensor(const GroupRep& a, const GroupRep& b) {
  if (a.mats.size() != b.mats.size()) throw DomainError("representations of different groups");
  const int da = a.dim(), db = b.dim();
  GroupRep out{"(" + a.label + " x " + b.label + ")", {}};
  for (std::size_t x = 0; x < a.mats.size(); ++x) {
    OpMatrix m(da * db, da * db);
    for (int s = 0; s < da; ++s)
      for (int t = 0; t < db; ++t)
        for (int j = 0; j < da; ++j)
          for (int k = 0; k < db; ++k) m(s * db + t, j * db + k) = a.mats[x](s, j) * b.mats[x](t, k);
    out.mats.push_back(std::move(m));
  }
  return out;
}

namespace {
OpMatrix matmul(const OpMatrix& a, const OpMatrix& b) {
  OpMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (int k = 0; k < b.cols(); ++k)
        if (!b(l, k).is_zero()) c(i, k) += a(i, l) * b(l, k);
    }
  return c;
}

OpMatrix identity_matrix(int d) {
  OpMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = QScalar(1);
  return m;
}
}  // namespace

bool is_representation(const FiniteGroup& g, const GroupRep& rep) {
  if (static_cast<int>(rep.mats.size()) != g.order()) return false;
  const int d = rep.dim();
  for (const auto& m : rep.mats)
    if (m.rows() != d || m.cols() != d) return false;
  if (rep.mats[g.identity()] != identity_matrix(d)) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (matmul(rep.mats[x], rep.mats[y]) != rep.mats[g.mul(x, y)]) return false;
  return true;
}

Corep<FunAlg> corep_from_rep(const FunAlg& h, const GroupRep& rep) {
  if (!is_representation(*h.group, rep)) throw DomainError("not a representation: " + rep.label);
  const int d = rep.dim();
  Matrix<FnElem> m(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int x = 0; x < h.group->order(); ++x)
        if (!rep.mats[x](j, k).is_zero()) m(j, k).values[x] = rep.mats[x](j, k);
  return {rep.label, m};
}

bool pointwise_condition(const FiniteGroup& g, const GroupRep& p, const GroupRep& q, const GroupRep& r,
                         const std::vector<OpMatrix>& ops) {
  if (static_cast<int>(ops.size()) != q.dim()) return false;
  for (const auto& Q : ops)
    if (Q.rows() != r.dim() || Q.cols() != p.dim()) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int j = 0; j < q.dim(); ++j) {
      const OpMatrix lhs = matmul(matmul(r.mats[x], ops[j]), p.mats[g.inv(x)]);
      OpMatrix rhs(r.dim(), p.dim());
      for (int k = 0; k < q.dim(); ++k) {
        const QScalar c = q.mats[x](k, j);
        if (c.is_zero()) continue;
        for (int m = 0; m < r.dim(); ++m)
          for (int i = 0; i < p.dim(); ++i) rhs(m, i) += c * ops[k](m, i);
      }
      if (lhs != rhs) return false;
    }
  return true;
}

ClassicalVerdicts classical_equivalence_check(const FunAlg& h, const GroupRep& p, const GroupRep& q, const GroupRep& r,
                                              const std::vector<OpMatrix>& ops) {
  const auto cp = corep_from_rep(h, p), cq = corep_from_rep(h, q), cr = corep_from_rep(h, r);
  ClassicalVerdicts v;
  const ItoFamily<FunAlg> f{ItoKind::Ordinary, cq, ops, 1};
  v.ordinary = is_ito_as(h, f, ItoKind::Ordinary, cp, cr).passed();
  v.twisted = is_ito_as(h, f, ItoKind::Twisted, cp, cr).passed();
  v.pointwise = pointwise_condition(*h.group, p, q, r, ops);
  const std::string tag = q.label + " " + p.label + "->" + r.label;
  auto word = [](bool b) { return std::string(b ? "holds" : "fails"); };
  v.report.suite = "classical";
  v.report.add(tag + " ordinary", v.ordinary, word(v.ordinary));
  v.report.add(tag + " twisted", v.twisted, word(v.twisted));
  v.report.add(tag + " pointwise", v.pointwise, word(v.pointwise));
  return v;
}

std::vector<OpMatrix> averaged_family(const FiniteGroup& g, const GroupRep& p, const GroupRep& q, const GroupRep& r) {
  const GroupRep qp = tensor(q, p);
  const int dq = q.dim(), dp = p.dim(), dr = r.dim();
  for (int e = 0; e < dr * dq * dp; ++e) {
    // T = sum_x Gamma^r(x^-1) E Gamma^{q x p}(x), E the unit at (e / (dq dp), e % (dq dp)).
    const int er = e / (dq * dp), ec = e % (dq * dp);
    OpMatrix T(dr, dq * dp);
    for (int x = 0; x < g.order(); ++x) {
      const OpMatrix& a = r.mats[g.inv(x)];
      const OpMatrix& b = qp.mats[x];
      for (int m = 0; m < dr; ++m) {
        if (a(m, er).is_zero()) continue;
        for (int c = 0; c < dq * dp; ++c)
          if (!b(ec, c).is_zero()) T(m, c) += a(m, er) * b(ec, c);
      }
    }
    bool zero = true;
    for (int m = 0; m < dr && zero; ++m)
      for (int c = 0; c < dq * dp && zero; ++c) zero = T(m, c).is_zero();
    if (zero) continue;
    std::vector<OpMatrix> ops;
    for (int k = 0; k < dq; ++k) {
      OpMatrix Q(dr, dp);
      for (int m = 0; m < dr; ++m)
        for (int i = 0; i < dp; ++i) Q(m, i) = T(m, k * dp + i);
      ops.push_back(std::move(Q));
    }
    return ops;
  }
  return {};
}

}  // namespace qito
