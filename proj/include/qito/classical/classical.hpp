#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qito/corep/corep.hpp"
#include "qito/ito/ito.hpp"

namespace qito {

// Multiplication table over indices 0..order-1; group axioms are checked on
// construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> names = {});

  /// {"order": n, "mul": [[...]], "names": [...]}; names are optional.
  static FiniteGroup from_json(const nlohmann::json& j);
  static FiniteGroup load(const std::string& path);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  const std::string& name(int a) const { return names_[a]; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<std::string> names_;
};

/// Permutations of {0,1,2} under composition (a*b)(i) = a(b(i)). Index order:
/// e, (01), (02), (12), (012), (021).
FiniteGroup symmetric_group_s3();
FiniteGroup cyclic_group(int n);
/// Permutation of {0,1,2} for an S3 index.
std::vector<int> s3_permutation(int index);

// A function on the group, zero values dropped.
struct FnElem {
  std::map<int, QScalar> values;

  static FnElem delta(int g, const QScalar& c = QScalar(1));
  QScalar at(int g) const;

  friend FnElem operator+(const FnElem& a, const FnElem& b);
  friend FnElem operator-(const FnElem& a, const FnElem& b);
  friend FnElem operator*(const FnElem& a, const QScalar& s);
  friend bool operator==(const FnElem& a, const FnElem& b) { return a.values == b.values; }
  friend bool operator!=(const FnElem& a, const FnElem& b) { return !(a == b); }
};

// A function on G x G.
struct FnTensor {
  std::map<std::pair<int, int>, QScalar> values;

  friend FnTensor operator+(const FnTensor& a, const FnTensor& b);
  friend bool operator==(const FnTensor& a, const FnTensor& b) { return a.values == b.values; }
  friend bool operator!=(const FnTensor& a, const FnTensor& b) { return !(a == b); }
};

/// Fun(G): pointwise product, D(f)(h,k) = f(hk), e(f) = f(e), S(f)(g) = f(g^-1).
/// Scalars are real so the star is the identity.
struct FunAlg {
  std::shared_ptr<const FiniteGroup> group;

  explicit FunAlg(FiniteGroup g) : group(std::make_shared<const FiniteGroup>(std::move(g))) {}

  using Elem = FnElem;
  using Tensor = FnTensor;

  Elem one() const;
  Elem zero() const { return {}; }
  Elem scalar(const QScalar& s) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Tensor coproduct(const Elem& a) const;
  Tensor outer(const Elem& a, const Elem& b) const;
  Elem mult(const Tensor& t) const;
  Tensor flip(const Tensor& t) const;
  QScalar counit(const Elem& a) const { return a.at(group->identity()); }
  Elem antipode(const Elem& a) const;
  Elem antipode_inv(const Elem& a) const { return antipode(a); }
  Elem star(const Elem& a) const { return a; }
  std::string text(const Elem& a) const;
  bool commutative() const { return true; }

  /// (1/|G|) sum_x f(x).
  QScalar haar(const Elem& a) const;
};

static_assert(HopfBackend<FunAlg>);

// Matrices Gamma(x) indexed by group element.
struct GroupRep {
  std::string label;
  std::vector<OpMatrix> mats;

  int dim() const { return mats.empty() ? 0 : mats.front().rows(); }
};

GroupRep trivial_rep(const FiniteGroup& g);
/// Parity of the S3 permutation.
GroupRep s3_sign_rep();
/// Permutation action on the plane x+y+z = 0 in the orthonormal basis
/// (1,-1,0)/sqrt2, (1,1,-2)/sqrt6.
GroupRep s3_standard_rep();
GroupRep direct_sum(const GroupRep& a, const GroupRep& b);
/// Gamma(x)(x)Gamma'(x) with index s*d' + t.
GroupRep tensor(const GroupRep& a, const GroupRep& b);

/// Gamma(x)Gamma(y) = Gamma(xy) and Gamma(e) = 1.
bool is_representation(const FiniteGroup& g, const GroupRep& rep);

/// Coefficient functions pi_jk(x) = Gamma(x)_jk. Throws on a non-representation.
Corep<FunAlg> corep_from_rep(const FunAlg& h, const GroupRep& rep);

/// Gamma^r(x) Q_j Gamma^p(x)^-1 = sum_k Gamma^q(x)_kj Q_k for every x.
bool pointwise_condition(const FiniteGroup& g, const GroupRep& p, const GroupRep& q, const GroupRep& r,
                         const std::vector<OpMatrix>& ops);

struct ClassicalVerdicts {
  bool ordinary = false, twisted = false, pointwise = false;
  Report report;

  bool agree() const { return ordinary == twisted && twisted == pointwise; }
};

/// Ordinary and twisted coalgebra conditions and the pointwise condition for
/// one family Q_k : V^p -> V^r transforming by q.
ClassicalVerdicts classical_equivalence_check(const FunAlg& h, const GroupRep& p, const GroupRep& q, const GroupRep& r,
                                              const std::vector<OpMatrix>& ops);

/// Q_k(v_i) = T(e_k (x) e_i) where T = sum_x Gamma^r(x^-1) E Gamma^q(x)(x)Gamma^p(x)
/// for the first unit matrix E giving T != 0. Empty if r is not in q (x) p.
std::vector<OpMatrix> averaged_family(const FiniteGroup& g, const GroupRep& p, const GroupRep& q, const GroupRep& r);

}  // namespace qito
