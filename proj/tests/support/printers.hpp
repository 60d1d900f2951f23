#pragma once

#include "doctest.h"
#include "qito/scalar/text.hpp"
#include "qito/suq2/text.hpp"

namespace doctest {
template <>
struct StringMaker<qito::QScalar> {
  static String convert(const qito::QScalar& s) { return qito::to_text(s).c_str(); }
};
template <>
struct StringMaker<qito::AlgElem> {
  static String convert(const qito::AlgElem& x) { return qito::to_text(x).c_str(); }
};
template <>
struct StringMaker<qito::Tensor2> {
  static String convert(const qito::Tensor2& x) { return qito::to_text(x).c_str(); }
};
}  // namespace doctest
