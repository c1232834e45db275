#pragma once

#include <cstdint>

#include "radmom/gray_image.hpp"
#include "radmom/moments.hpp"

namespace radmom {

// Ground-truth backend: evaluates each moment independently by its
// definition, one full image pass per moment, weights rebuilt from scratch by
// repeated multiplication. Deliberately shares nothing between moments; every
// other backend is tested against this one.
//
// Structural multiplication count: moment (i,j) costs i+j multiplications per
// pixel, and the ten orders sum to 20, so the tally is exactly
// naive_mult_count(w, h) = 20*w*h regardless of pixel values.
inline constexpr std::uint64_t naive_mult_count(int width, int height) {
  return 20ull * std::uint64_t(width) * std::uint64_t(height);
}

inline RawMoments naive_raw_moments(const GrayImage& image,
                                    MultCounter* counter = nullptr) {
  if (counter) counter->reset();
  const int w = image.width();
  const int h = image.height();
  std::array<int128, 10> values{};
  for (std::size_t t = 0; t < kMomentOrders.size(); ++t) {
    const auto [i, j] = kMomentOrders[t];
    int128 acc = 0;
    for (int y = 0; y < h; ++y) {
      const std::uint8_t* row = image.row(y).data();
      for (int x = 0; x < w; ++x) {
        int128 term = row[x];
        for (int a = 0; a < i; ++a) term *= x;
        for (int b = 0; b < j; ++b) term *= y;
        acc += term;
      }
    }
    values[t] = acc;
    if (counter)
      counter->count += std::uint64_t(i + j) * std::uint64_t(w) * std::uint64_t(h);
  }
  return moments_from_array(values);
}

// Optimized row-wise backend. Per pixel, the running products p*x, (p*x)*x,
// ((p*x)*x)*x feed four row sums (3 multiplications per pixel); each finished
// row then folds into the ten accumulators with exactly 7 more:
//   py = y*s0, sy = y*y, py*sy, s1*sy, s2*y, s0*sy, s1*y.
// Structural count: baseline_mult_count(w, h) = 3*w*h + 7*h.
inline constexpr std::uint64_t baseline_mult_count(int width, int height) {
  return 3ull * std::uint64_t(width) * std::uint64_t(height) +
         7ull * std::uint64_t(height);
}

inline RawMoments baseline_raw_moments(const GrayImage& image,
                                       MultCounter* counter = nullptr) {
  if (counter) counter->reset();
  const int w = image.width();
  const int h = image.height();
  RawMoments m;
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = image.row(y).data();
    // Row sums of p, p*x, p*x^2, p*x^3. The first three fit in 64 bits for
    // widths up to 2^15; the cubic one does not and accumulates in 128.
    std::uint64_t s0 = 0, s1 = 0, s2 = 0;
    int128 s3 = 0;
    for (int x = 0; x < w; ++x) {
      const std::uint64_t p = row[x];
      const std::uint64_t px = p * std::uint64_t(x);
      const std::uint64_t pxx = px * std::uint64_t(x);
      const std::uint64_t pxxx = pxx * std::uint64_t(x);
      s0 += p;
      s1 += px;
      s2 += pxx;
      s3 += pxxx;
    }
    const int128 yy = y;
    const int128 py = yy * int128(s0);
    const int128 sy = yy * yy;
    m.m03 += py * sy;
    m.m12 += int128(s1) * sy;
    m.m21 += int128(s2) * yy;
    m.m30 += s3;
    m.m02 += int128(s0) * sy;
    m.m11 += int128(s1) * yy;
    m.m20 += int128(s2);
    m.m01 += py;
    m.m10 += int128(s1);
    m.m00 += int128(s0);
    if (counter) counter->count += 3ull * std::uint64_t(w) + 7;
  }
  return m;
}

}  // namespace radmom
