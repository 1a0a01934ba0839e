#pragma once

#include <string>
#include <string_view>

namespace snnpat {

/// kReference: every testing synapse on the fixed 2^-11 grid, exact decay.
/// kHardwareLike: exploratory. The grid is coarsened per network so the largest
/// scaled magnitude fits an 11-bit fraction, and the decay factor is stored
/// with 15 fractional bits. Not the model the acceptance tables are judged on.
enum class ArithmeticProfile { kReference, kHardwareLike };

/// "reference" or "hardware". Throws ValidationError otherwise.
ArithmeticProfile parse_profile(std::string_view text);
std::string to_string(ArithmeticProfile profile);

}  // namespace snnpat
