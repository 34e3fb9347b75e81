#ifndef ROOKMN_INTS_HPP
#define ROOKMN_INTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rookmn {

using Int = std::int64_t;
using Int128 = __int128;

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

std::string to_string(Int128 v);

// Parses a decimal integer (optional leading '-') into Int128.
Int128 int128_from_string(const std::string& s);

}  // namespace rookmn

#endif  // ROOKMN_INTS_HPP
