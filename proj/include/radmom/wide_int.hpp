#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace radmom {

// All moment accumulation runs in 128 bits. The third-order moments of a
// 12-megapixel 8-bit image already exceed 63 bits (255 * N*M * (M-1)^3),
// so 64-bit sums would overflow silently on realistic inputs. 128 bits
// cover dimensions up to 2^15 with ample margin.
using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string(int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Two's-complement negate in the unsigned type; handles INT128_MIN.
  uint128 magnitude =
      negative ? uint128(0) - uint128(value) : uint128(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(char('0' + int(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline std::string to_string(uint128 value) {
  if (value > uint128(~int128(0)) >> 1) {
    std::string digits;
    while (value > 0) {
      digits.push_back(char('0' + int(value % 10)));
      value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
  }
  return to_string(int128(value));
}

// Integer division that must leave no remainder. Every division in the
// moment assembly is provably exact, so a remainder means the surrounding
// algebra is wrong and we fail hard instead of truncating.
inline int128 exact_div(int128 numerator, int128 divisor) {
  if (divisor == 0) throw std::logic_error("exact_div: division by zero");
  if (numerator % divisor != 0) {
    throw std::logic_error("exact_div: " + to_string(numerator) +
                           " is not divisible by " + to_string(divisor));
  }
  return numerator / divisor;
}

}  // namespace radmom
