#include "qito/suq2/coreps.hpp"

namespace qito {

Corep<Suq2> pi(int j2) {
  if (j2 < 0) throw DomainError("negative spin");
  Matrix<AlgElem> m(j2 + 1, j2 + 1);
  for (int r = 0; r <= j2; ++r)
    for (int c = 0; c <= j2; ++c) m(r, c) = dfun(j2, m_twice_of_index(j2, r), m_twice_of_index(j2, c));
  return {"pi^" + HalfInt{j2}.to_string(), m};
}

}  // namespace qito
