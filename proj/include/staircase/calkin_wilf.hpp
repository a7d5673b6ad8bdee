#ifndef STAIRCASE_CALKIN_WILF_HPP
#define STAIRCASE_CALKIN_WILF_HPP

#include <cstdint>
#include <vector>

#include "staircase/checked.hpp"
#include "staircase/lattice.hpp"

namespace staircase {

// The fixed enumeration of the positive rationals used by the truncation
// maps: 1/1, 1/2, 2/1, 1/3, 3/2, 2/3, 3/1, ... Every reduced fraction
// appears exactly once.

inline Slope calkin_wilf_first() { return Slope{1, 1}; }

inline Slope calkin_wilf_successor(Slope v) {
  // next = 1 / (2*floor(v) - v + 1), evaluated exactly on p/q.
  const std::int64_t f = v.num / v.den;
  const std::int64_t den =
      checked_sub(checked_mul(checked_add(checked_mul(2, f), 1), v.den), v.num);
  return Slope::reduced(v.den, den);
}

inline std::vector<Slope> calkin_wilf_prefix(std::int64_t n) {
  std::vector<Slope> prefix;
  prefix.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
  Slope v = calkin_wilf_first();
  for (std::int64_t i = 0; i < n; ++i) {
    prefix.push_back(v);
    v = calkin_wilf_successor(v);
  }
  return prefix;
}

}  // namespace staircase

#endif  // STAIRCASE_CALKIN_WILF_HPP
