#pragma once

#include <compare>
#include <cstdint>

namespace snnpat {

inline constexpr int kWeightFractionBits = 11;
inline constexpr double kWeightLsb = 1.0 / (1 << kWeightFractionBits);  // 2^-11

/// Synaptic magnitude as an integer count of 2^-11 weight units.
class FixedWeight {
 public:
  constexpr FixedWeight() = default;

  static constexpr FixedWeight from_lsb(std::uint64_t count) {
    FixedWeight w;
    w.lsb_count_ = count;
    return w;
  }

  constexpr std::uint64_t lsb_count() const { return lsb_count_; }
  constexpr double value() const { return static_cast<double>(lsb_count_) * kWeightLsb; }

  constexpr auto operator<=>(const FixedWeight&) const = default;

 private:
  std::uint64_t lsb_count_ = 0;
};

/// Largest representable magnitude (2^32 LSB).
inline constexpr double kMaxWeight = 4294967296.0 * kWeightLsb;

/// Round-to-nearest (ties away from zero) onto the 2^-11 grid.
/// Throws ContractViolation for negative, non-finite or out-of-range input.
FixedWeight quantize_weight(double w);

/// Same rounding onto a coarser grid of 2^coarsen_shift LSB. A shift of 0 is quantize_weight.
FixedWeight quantize_weight(double w, int coarsen_shift);

}  // namespace snnpat
