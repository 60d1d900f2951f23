#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qito/scalar/qscalar.hpp"

namespace qito {

// Printing. Powers are written in q (t^k is q^(k/2)), polynomials in
// descending powers, e.g. `q+q^-1`, `q^(1/2)`, `2*q^-2`.
std::string to_text(const LaurentPoly& p);
std::string to_text(const RationalFn& f);
std::string to_text(const QScalar& s);

/// Text of a power t^k, "" for k = 0.
std::string q_power_text(int t_exponent);

// Parse tree shared by the scalar and algebra parsers. Generators X, U, V, Y
// are only meaningful for the algebra evaluator.
struct Expr {
  enum class Kind { Number, Q, T, Generator, Add, Sub, Mul, Div, Neg, Pow, Sqrt };
  Kind kind = Kind::Number;
  Rational number;
  char generator = 0;
  // Pow exponent as a fraction.
  int exp_num = 0;
  int exp_den = 1;
  std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar: sums and products of numbers, q, t, sqrt(...), X, U, V, Y and
/// parenthesised groups; `^` takes an integer, `-n` or `(a/b)`.
ExprPtr parse_expression(std::string_view text);

/// Evaluates a generator-free tree; throws ParseError on generators.
QScalar eval_scalar_expr(const Expr& e);
QScalar parse_qscalar(std::string_view text);
LaurentPoly parse_laurent(std::string_view text);

nlohmann::json to_json(const QScalar& s);
QScalar qscalar_from_json(const nlohmann::json& j);

}  // namespace qito
