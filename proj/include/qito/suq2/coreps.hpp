#pragma once

#include "qito/corep/corep.hpp"
#include "qito/suq2/backend.hpp"
#include "qito/suq2/dfun.hpp"

namespace qito {

/// The spin-j corepresentation pi^j (twice-value j2), rows m = j..-j.
Corep<Suq2> pi(int j2);

}  // namespace qito
