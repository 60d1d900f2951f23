#pragma once

#include <vector>

namespace qito::testing {

// Printed matrix coefficient tables of pi^1/2, pi^1 and pi^3/2, rows and
// columns ordered m = j, j-1, ..., -j.
inline const std::vector<std::vector<const char*>>& golden_pi_half() {
  static const std::vector<std::vector<const char*>> t{{"X", "U"}, {"V", "Y"}};
  return t;
}

inline const std::vector<std::vector<const char*>>& golden_pi_one() {
  static const std::vector<std::vector<const char*>> t{
      {"X^2", "q^(1/2)*sqrt(q+q^-1)*X*U", "U^2"},
      {"q^(1/2)*sqrt(q+q^-1)*X*V", "X*Y+q*U*V", "q^(1/2)*sqrt(q+q^-1)*U*Y"},
      {"V^2", "q^(1/2)*sqrt(q+q^-1)*V*Y", "Y^2"}};
  return t;
}

inline const std::vector<std::vector<const char*>>& golden_pi_three_halves() {
  static const std::vector<std::vector<const char*>> t{
      {"X^3", "q*sqrt(q^2+1+q^-2)*X^2*U", "q*sqrt(q^2+1+q^-2)*X*U^2", "U^3"},
      {"q*sqrt(q^2+1+q^-2)*X^2*V", "X^2*Y+q^2*(q+q^-1)*X*U*V", "q*(q+q^-1)*X*U*Y+q^2*U^2*V",
       "q*sqrt(q^2+1+q^-2)*U^2*Y"},
      {"q*sqrt(q^2+1+q^-2)*X*V^2", "q*(q+q^-1)*X*V*Y+q^2*U*V^2", "X*Y^2+q^2*(q+q^-1)*U*V*Y",
       "q*sqrt(q^2+1+q^-2)*U*Y^2"},
      {"V^3", "q*sqrt(q^2+1+q^-2)*V^2*Y", "q*sqrt(q^2+1+q^-2)*V*Y^2", "Y^3"}};
  return t;
}

}  // namespace qito::testing
