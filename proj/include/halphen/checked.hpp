#pragma once

#include <cstdint>

#include "halphen/error.hpp"

namespace halphen::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

/// a + b * c
inline std::int64_t fma(std::int64_t a, std::int64_t b, std::int64_t c) { return add(a, mul(b, c)); }

/// Least nonnegative residue of a modulo d (d > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t d) {
  std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace halphen::checked
