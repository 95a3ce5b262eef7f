#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hoffdig {

/// Thrown whenever an exact integer operation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    throw OverflowError("128-bit intermediate does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline __int128 mul128(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in 128-bit multiplication");
  return r;
}

inline __int128 add128(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in 128-bit addition");
  return r;
}

}  // namespace checked
}  // namespace hoffdig
