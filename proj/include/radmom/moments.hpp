#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <utility>

#include "radmom/wide_int.hpp"

namespace radmom {

// Tally of the multiplications a backend performs. `count` covers weight
// multiplications in the summation loops; `assembly_count` covers the
// constant-factor multiplications and exact divisions of the final scalar
// assembly. Backends reset the counter on entry, so a counter read after a
// call is that call's tally.
struct MultCounter {
  std::uint64_t count = 0;
  std::uint64_t assembly_count = 0;

  void reset() {
    count = 0;
    assembly_count = 0;
  }
  std::uint64_t total() const { return count + assembly_count; }
};

// The ten raw moments m_ij = sum I(x,y) * x^i * y^j for orders i+j <= 3,
// exact signed 128-bit integers.
struct RawMoments {
  int128 m00 = 0;
  int128 m10 = 0;
  int128 m01 = 0;
  int128 m20 = 0;
  int128 m11 = 0;
  int128 m02 = 0;
  int128 m30 = 0;
  int128 m21 = 0;
  int128 m12 = 0;
  int128 m03 = 0;

  bool operator==(const RawMoments&) const = default;
};

// Canonical output order.
inline constexpr std::array<const char*, 10> kMomentNames = {
    "M00", "M10", "M01", "M20", "M11", "M02", "M30", "M21", "M12", "M03"};

// (x exponent, y exponent) per moment, same order as kMomentNames.
inline constexpr std::array<std::pair<int, int>, 10> kMomentOrders = {{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
    {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};

inline std::array<int128, 10> as_array(const RawMoments& m) {
  return {m.m00, m.m10, m.m01, m.m20, m.m11,
          m.m02, m.m30, m.m21, m.m12, m.m03};
}

inline RawMoments moments_from_array(const std::array<int128, 10>& a) {
  RawMoments m;
  m.m00 = a[0]; m.m10 = a[1]; m.m01 = a[2]; m.m20 = a[3]; m.m11 = a[4];
  m.m02 = a[5]; m.m30 = a[6]; m.m21 = a[7]; m.m12 = a[8]; m.m03 = a[9];
  return m;
}

inline std::ostream& operator<<(std::ostream& out, const RawMoments& m) {
  const auto values = as_array(m);
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << " ";
    out << kMomentNames[i] << "=" << to_string(values[i]);
  }
  return out << "}";
}

}  // namespace radmom
