#pragma once

#include <cstdint>
#include <string>

#include "fusionburnside/error.hpp"

namespace fusionburnside {

// Overflow in counting is a bug, so every accumulation goes through these.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InvariantError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw InvariantError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InvariantError("integer overflow in multiplication");
  return r;
}

/// Non-negative residue of `a` modulo `m` (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace fusionburnside
