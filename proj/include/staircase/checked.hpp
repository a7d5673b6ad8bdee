#ifndef STAIRCASE_CHECKED_HPP
#define STAIRCASE_CHECKED_HPP

#include <cstdint>

#include "staircase/errors.hpp"

namespace staircase {

// All coordinate arithmetic goes through these helpers. Exponents are stored
// as int64_t; any operation that would wrap raises OverflowDetected instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowDetected("integer addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowDetected("integer subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected("integer multiplication overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace staircase

#endif  // STAIRCASE_CHECKED_HPP
