#pragma once

#include <compare>
#include <string>

namespace qito {

// A label j or m stored as 2j.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt integer(int n) { return HalfInt{2 * n}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr HalfInt operator-() const { return {-twice}; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// "1", "-1/2", "3/2".
  std::string to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

/// Number of states 2j+1.
constexpr int dim_of(HalfInt j) { return j.twice + 1; }

/// Twice-m of basis index i (m runs down from +j).
constexpr int m_twice_of_index(int j_twice, int i) { return j_twice - 2 * i; }
constexpr int index_of_m_twice(int j_twice, int m_twice) { return (j_twice - m_twice) / 2; }

/// Checks that |m| <= j and j - m is integral.
constexpr bool valid_jm(int j_twice, int m_twice) {
  return j_twice >= 0 && m_twice <= j_twice && m_twice >= -j_twice && ((j_twice - m_twice) % 2 == 0);
}

}  // namespace qito
