#pragma once

#include "qito/corep/backend.hpp"
#include "qito/suq2/hopf.hpp"
#include "qito/suq2/text.hpp"

namespace qito {

/// O(SU_q(2)) as a HopfBackend.
struct Suq2 {
  using Elem = AlgElem;
  using Tensor = Tensor2;

  Elem one() const { return AlgElem(1); }
  Elem zero() const { return AlgElem(); }
  Elem scalar(const QScalar& s) const { return AlgElem(s); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Tensor coproduct(const Elem& a) const { return qito::coproduct(a); }
  Tensor outer(const Elem& a, const Elem& b) const { return qito::outer(a, b); }
  Elem mult(const Tensor& t) const { return qito::mult(t); }
  Tensor flip(const Tensor& t) const { return qito::flip(t); }
  QScalar counit(const Elem& a) const { return qito::counit(a); }
  Elem antipode(const Elem& a) const { return qito::antipode(a); }
  Elem antipode_inv(const Elem& a) const { return qito::antipode_inv(a); }
  Elem star(const Elem& a) const { return qito::star(a); }
  std::string text(const Elem& a) const { return to_text(a); }
  bool commutative() const { return false; }
};

static_assert(HopfBackend<Suq2>);

}  // namespace qito
