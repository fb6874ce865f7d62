#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ellgenus/error.hpp"

namespace ellgenus {

// All lattice arithmetic runs in 64-bit integers with overflow traps. Values
// that can legitimately grow large (determinants) go through cpp_int instead.
using Int = std::int64_t;
using Vector = std::vector<Int>;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs_checked(Int a) { return a < 0 ? neg(a) : a; }

/// a += b * c with overflow checks.
inline void add_mul(Int& a, Int b, Int c) { a = add(a, mul(b, c)); }

/// Non-negative gcd of all entries; 0 for the zero vector.
inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, abs_checked(x));
  return g;
}

/// Floor division for signed integers (b != 0).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// The multiple q such that a - q*b has the least absolute value (ties toward
/// the smaller q).
inline Int nearest_quotient(Int a, Int b) {
  Int q = floor_div(a, b);
  Int r = sub(a, mul(q, b));
  Int ab = abs_checked(b);
  if (2 * abs_checked(r) > ab) ++q;
  return q;
}

}  // namespace ellgenus
