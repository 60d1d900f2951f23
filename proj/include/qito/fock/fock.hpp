#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qito/ito/ito.hpp"
#include "qito/suq2/backend.hpp"

namespace qito {

// |n1, n2>; v^j_m = |j+m, j-m>.
struct FockState {
  int n1 = 0, n2 = 0;
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

// Linear operator on the truncated space n1 + n2 <= n_max. Sources whose
// image would leave the truncation are listed in `clipped` and have no
// images; they must never be compared.
struct FockOperator {
  int n_max = 0;
  std::map<FockState, std::vector<std::pair<FockState, QScalar>>> images;
  std::set<FockState> clipped;

  std::vector<std::pair<FockState, QScalar>> apply(const FockState& s) const;
};

enum class BosonOp { Create1, Create2, Annih1, Annih2, Number1, Number2 };

/// b^+|n> = [n+1]^(1/2)|n+1>, b|n> = [n]^(1/2)|n-1>, N|n> = n|n> on one mode.
FockOperator boson(BosonOp op, int n_max);
/// q^(power * N_mode / 2), i.e. the diagonal t^(power * n).
FockOperator q_power_number(int mode, int power, int n_max);
FockOperator scalar_operator(const QScalar& s, int n_max);
/// a after b.
FockOperator compose(const FockOperator& a, const FockOperator& b);
FockOperator operator+(const FockOperator& a, const FockOperator& b);
FockOperator operator-(const FockOperator& a, const FockOperator& b);
bool same_on_unclipped(const FockOperator& a, const FockOperator& b);

// A candidate pair (Q_{1/2}, Q_{-1/2}) written as words in the boson
// operators; factors apply right to left.
struct FockFactor {
  enum Kind { Create, Annih, QPowN, Scalar } kind;
  int mode = 1;
  int power = 0;
  QScalar scalar;
};
using FockWord = std::vector<FockFactor>;

struct CandidateVariant {
  std::string name;
  ItoKind kind;  // the kind the pair is expected to satisfy
  int shift;     // +1 raises 2j by one, -1 lowers it
  FockWord top, bottom;
};

/// The four candidate pairs (Q_{1/2}, Q_{-1/2}):
///   raise_ordinary  b1^+ q^(-N2/2),     b2^+ q^(N1/2)
///   lower_ordinary  q b2 q^(N1/2),      -b1 q^(-N2/2)
///   raise_twisted   b1^+ q^(N2/2),      b2^+ q^(-N1/2)
///   lower_twisted   q^-1 b2 q^(-N1/2),  -b1 q^(N2/2)
const std::vector<CandidateVariant>& candidate_variants();
const CandidateVariant& candidate_variant(const std::string& name);

FockOperator realize(const FockWord& w, int n_max);

/// Index of |n1, n2> in the direct sum of pi^j for 2j = 0 .. jmax (j
/// ascending, m descending inside a block).
int big_index(const FockState& s);
FockState big_state(int index);

/// pi on the direct sum of pi^j, 2j <= jmax.
Corep<Suq2> big_coaction(int jmax);

/// Matrix of an operator on the big space; clipped sources give zero columns.
OpMatrix big_matrix(const FockOperator& op, int jmax);

/// The defining condition of `kind` for the candidate on every v^j_m with
/// 2j <= jmax - 1, so no image is clipped. With `numeric_q`, residual legs are
/// instead evaluated there and must vanish within 10^-digits.
Report verify_boson_ito(const CandidateVariant& v, ItoKind kind, int jmax, std::optional<Rational> numeric_q = std::nullopt,
                        int digits = 30);

/// The candidate restricted to blocks (2j, 2j + shift) as a family between
/// those blocks, for Wigner-Eckart checks.
std::vector<OpMatrix> block_family(const CandidateVariant& v, int j);

/// For 2j <= jmax: sum_m' (j+1/2, m'+1/2; j, -m' | 1/2, 1/2)(j+1/2, m'+1/2; j, -m' | j', 1/2)
/// equals 1 for j' = 1/2 and 0 otherwise.
Report orthogonality_collapse(int jmax);

}  // namespace qito
