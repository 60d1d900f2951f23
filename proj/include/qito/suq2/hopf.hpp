#pragma once

#include "qito/suq2/pbw.hpp"

namespace qito {

// Generator tables:
//   D(X) = X(x)X + U(x)V   D(Y) = V(x)U + Y(x)Y
//   D(U) = X(x)U + U(x)Y   D(V) = V(x)X + Y(x)V
//   e(X) = e(Y) = 1, e(U) = e(V) = 0
//   S(X) = Y, S(Y) = X, S(U) = -qU, S(V) = -q^-1 V   (antihomomorphism)
//   X* = Y, Y* = X, U* = -q^-1 V, V* = -qU           (antihomomorphism)

Tensor2 coproduct(const AlgElem& x);
QScalar counit(const AlgElem& x);
AlgElem antipode(const AlgElem& x);
AlgElem antipode_inv(const AlgElem& x);
/// Coefficients are real functions of real q, so * fixes them.
AlgElem star(const AlgElem& x);

const std::vector<std::pair<std::array<PbwMonomial, 2>, LaurentPoly>>& monomial_coproduct(const PbwMonomial& m);

// Leg maps used by the axiom checks.
Tensor3 coproduct_left(const Tensor2& t);   // (D (x) id)
Tensor3 coproduct_right(const Tensor2& t);  // (id (x) D)
AlgElem counit_left(const Tensor2& t);      // (e (x) id)
AlgElem counit_right(const Tensor2& t);     // (id (x) e)
Tensor2 antipode_left(const Tensor2& t);    // (S (x) id)
Tensor2 antipode_right(const Tensor2& t);   // (id (x) S)

}  // namespace qito
