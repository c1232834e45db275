#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace radmom {

// Precomputed k^i weight arrays for i in {1,2,3}, k in [0, max_k]. Built once
// per array length and reused across moment calls; construction cost is
// excluded from per-call multiplication counts.
class PowerTable {
 public:
  // k^3 must stay exact in 64 bits.
  static constexpr std::uint64_t kMaxSupported = 2'642'245;

  explicit PowerTable(std::uint64_t max_k) : max_k_(max_k) {
    if (max_k > kMaxSupported)
      throw std::invalid_argument("PowerTable: max_k too large for exact k^3");
    pow1_.resize(max_k + 1);
    pow2_.resize(max_k + 1);
    pow3_.resize(max_k + 1);
    for (std::uint64_t k = 0; k <= max_k; ++k) {
      pow1_[k] = k;
      pow2_[k] = k * k;
      pow3_[k] = pow2_[k] * k;
    }
  }

  std::uint64_t max_k() const { return max_k_; }

  // k^order for order in [1,3], bounds-checked.
  std::uint64_t pow(int order, std::uint64_t k) const {
    if (k > max_k_) throw std::out_of_range("PowerTable: index exceeds max_k");
    return powers(order)[k];
  }

  std::span<const std::uint64_t> powers(int order) const {
    switch (order) {
      case 1: return pow1_;
      case 2: return pow2_;
      case 3: return pow3_;
      default:
        throw std::invalid_argument("PowerTable: order must be 1, 2 or 3");
    }
  }

 private:
  std::uint64_t max_k_;
  std::vector<std::uint64_t> pow1_, pow2_, pow3_;
};

}  // namespace radmom
