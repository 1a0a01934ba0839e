#include "snnpat/fixed_weight.h"

#include <cmath>
#include <string>

#include "snnpat/errors.h"

namespace snnpat {

FixedWeight quantize_weight(double w) { return quantize_weight(w, 0); }

FixedWeight quantize_weight(double w, int coarsen_shift) {
  if (!std::isfinite(w) || w < 0.0) {
    throw ContractViolation("quantize_weight: weight must be finite and non-negative, got " +
                            std::to_string(w));
  }
  if (w > kMaxWeight) {
    throw ContractViolation("quantize_weight: weight " + std::to_string(w) +
                            " exceeds the representable range");
  }
  if (coarsen_shift < 0 || coarsen_shift > 32) {
    throw ContractViolation("quantize_weight: coarsening shift out of range");
  }
  // Scaling by a power of two is exact, so std::round sees the true tie cases.
  const double step = std::ldexp(1.0, coarsen_shift - kWeightFractionBits);
  const auto steps = static_cast<std::uint64_t>(std::round(w / step));
  return FixedWeight::from_lsb(steps << coarsen_shift);
}

}  // namespace snnpat
