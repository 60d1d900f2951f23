#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qito/suq2/pbw.hpp"

namespace qito {

/// `coeff*X^a*U^b*V^c*Y^d` terms joined by " + ", lowest degree first.
std::string to_text(const PbwMonomial& m);
std::string to_text(const AlgElem& x);
std::string to_text(const Tensor2& t);

/// Parses any expression over scalars and X, U, V, Y and normal-forms it.
AlgElem parse_alg_elem(std::string_view text);

/// [{"monomial": [a,b,c,d], "coeff": <scalar json>}, ...]
nlohmann::json to_json(const AlgElem& x);
AlgElem alg_elem_from_json(const nlohmann::json& j);

}  // namespace qito
