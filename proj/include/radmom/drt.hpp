#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>

#include "radmom/gray_image.hpp"
#include "radmom/moments.hpp"
#include "radmom/power_table.hpp"
#include "radmom/projections.hpp"
#include "radmom/wide_int.hpp"

namespace radmom {

// i-th moment of a 1D array with an index shift:
//   sum_k arr[k] * (k + offset)^order
// Order 0 performs no multiplications; any other order performs exactly
// arr.size() of them. Negative shifted indices contribute with the sign of
// (k+offset)^order, applied through the exponent parity rather than with
// extra multiplications.
inline int128 array_moment(std::span<const std::uint32_t> arr, int order,
                           std::int64_t offset, const PowerTable& table,
                           MultCounter* counter = nullptr) {
  if (order < 0 || order > 3)
    throw std::invalid_argument("array_moment: order must be in [0,3]");
  if (order == 0) {
    int128 total = 0;
    for (std::uint32_t v : arr) total += v;
    return total;
  }
  if (!arr.empty()) {
    // |k+offset| is largest at one of the two ends of the index range.
    const std::uint64_t lo = std::uint64_t(std::abs(offset));
    const std::uint64_t hi =
        std::uint64_t(std::abs(std::int64_t(arr.size()) - 1 + offset));
    if (lo > table.max_k() || hi > table.max_k())
      throw std::out_of_range("array_moment: power table too small");
  }
  const std::span<const std::uint64_t> weights = table.powers(order);
  const bool odd_order = (order & 1) != 0;
  int128 acc = 0;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::int64_t shifted = std::int64_t(k) + offset;
    const std::uint64_t mag =
        shifted < 0 ? std::uint64_t(-shifted) : std::uint64_t(shifted);
    const int128 term = int128(arr[k]) * int128(weights[mag]);
    if (odd_order && shifted < 0)
      acc -= term;
    else
      acc += term;
  }
  if (counter) counter->count += arr.size();
  return acc;
}

// Largest power-table index the moment assembly of a w*h image touches:
// the diagonal arrays run up to k = w+h-2.
inline constexpr std::uint64_t drt_table_max_k(int width, int height) {
  return std::uint64_t(width) + std::uint64_t(height) - 2;
}

// Weight multiplications of one drt_raw_moments call with a prebuilt table:
// three inner products each over the vertical (w), horizontal (h), and two
// diagonal (w+h-1) arrays.
inline constexpr std::uint64_t drt_mult_count(int width, int height) {
  return 3ull * std::uint64_t(width) + 3ull * std::uint64_t(height) +
         3ull * (std::uint64_t(width) + std::uint64_t(height) - 1);
}

// Constant-factor operations in the scalar assembly below: one exact
// division for m11, one doubling and one exact division each for m12 and m21.
inline constexpr std::uint64_t kDrtAssemblyMults = 5;

// Raw moments through the axis projections: ten 2D sums become nine 1D inner
// products plus a constant-size scalar assembly. m00 and the pure x/y moments
// read off the vertical/horizontal projections directly; the mixed moments
// come from the diagonal identities
//   d2 = m20 + m02 + 2*m11
//   d3 = m30 + m03 + 3*m21 + 3*m12
//   a3 = m03 - m30 + 3*m21 - 3*m12
// which invert to m11 = (d2 - m20 - m02)/2, m12 = (d3 - a3 - 2*m30)/6 and
// m21 = (d3 + a3 - 2*m03)/6. Pairing m12 with the *difference* and m21 with
// the *sum* is easy to get backwards; the swapped variant produces inexact
// divisions (13/3 on the 2x2 test image) and trips the exact_div guard, which
// is why every division here asserts divisibility instead of truncating.
inline RawMoments drt_raw_moments(const GrayImage& image,
                                  const PowerTable& table,
                                  MultCounter* counter = nullptr) {
  if (counter) counter->reset();
  const ProjectionSet proj = project(image);
  const std::int64_t anti_offset = -(std::int64_t(image.width()) - 1);

  RawMoments m;
  m.m00 = array_moment(proj.vertical, 0, 0, table, counter);
  m.m10 = array_moment(proj.vertical, 1, 0, table, counter);
  m.m20 = array_moment(proj.vertical, 2, 0, table, counter);
  m.m30 = array_moment(proj.vertical, 3, 0, table, counter);
  m.m01 = array_moment(proj.horizontal, 1, 0, table, counter);
  m.m02 = array_moment(proj.horizontal, 2, 0, table, counter);
  m.m03 = array_moment(proj.horizontal, 3, 0, table, counter);
  const int128 d2 = array_moment(proj.diagonal, 2, 0, table, counter);
  const int128 d3 = array_moment(proj.diagonal, 3, 0, table, counter);
  const int128 a3 =
      array_moment(proj.antidiagonal, 3, anti_offset, table, counter);

  m.m11 = exact_div(d2 - m.m20 - m.m02, 2);
  m.m12 = exact_div(d3 - a3 - 2 * m.m30, 6);
  m.m21 = exact_div(d3 + a3 - 2 * m.m03, 6);
  if (counter) counter->assembly_count += kDrtAssemblyMults;
  return m;
}

// Convenience overload that builds the power table for this image size.
inline RawMoments drt_raw_moments(const GrayImage& image,
                                  MultCounter* counter = nullptr) {
  const PowerTable table(drt_table_max_k(image.width(), image.height()));
  return drt_raw_moments(image, table, counter);
}

}  // namespace radmom
