#pragma once

#include <concepts>

#include "qito/scalar/qscalar.hpp"

namespace qito {

// What the corepresentation machinery needs from a Hopf *-algebra. Elements
// and tensors are value types with +, -, scalar * and ==; everything
// structural goes through the backend object.
template <class H>
concept HopfBackend = requires(const H& h, const typename H::Elem& a, const typename H::Tensor& t, const QScalar& s) {
  typename H::Elem;
  typename H::Tensor;
  { h.one() } -> std::same_as<typename H::Elem>;
  { h.zero() } -> std::same_as<typename H::Elem>;
  { h.scalar(s) } -> std::same_as<typename H::Elem>;
  { h.mul(a, a) } -> std::same_as<typename H::Elem>;
  { h.coproduct(a) } -> std::same_as<typename H::Tensor>;
  { h.outer(a, a) } -> std::same_as<typename H::Tensor>;
  { h.mult(t) } -> std::same_as<typename H::Elem>;
  { h.flip(t) } -> std::same_as<typename H::Tensor>;
  { h.counit(a) } -> std::same_as<QScalar>;
  { h.antipode(a) } -> std::same_as<typename H::Elem>;
  { h.antipode_inv(a) } -> std::same_as<typename H::Elem>;
  { h.star(a) } -> std::same_as<typename H::Elem>;
  { h.text(a) } -> std::same_as<std::string>;
  { a + a } -> std::same_as<typename H::Elem>;
  { a - a } -> std::same_as<typename H::Elem>;
  { a * s } -> std::same_as<typename H::Elem>;
  { a == a } -> std::convertible_to<bool>;
  { t + t } -> std::same_as<typename H::Tensor>;
  { t == t } -> std::convertible_to<bool>;
};

}  // namespace qito
