#pragma once

#include <string>
#include <string_view>

#include "qito/suq2/pbw.hpp"

namespace qito {

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of coeff * w for a word over {X, U, V, Y}, by exhaustive
/// rewriting with
///   UX -> qXU, VX -> qXV, YU -> qUY, YV -> qVY, VU -> UV,
///   XY -> 1 + q^-1 UV, YX -> 1 + q UV,
/// plus X W Y -> q^-|W| W (1 + q^-1 UV) for a nonempty word W in U, V (the
/// seven rules alone leave X U Y irreducible). Independent of the monomial product table,
/// which makes it a confluence oracle.
AlgElem normal_form(std::string_view word, const QScalar& coeff = QScalar(1),
                    RewriteStrategy strategy = RewriteStrategy::Leftmost);

}  // namespace qito
