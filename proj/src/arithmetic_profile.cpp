#include "snnpat/arithmetic_profile.h"

#include "snnpat/errors.h"

namespace snnpat {

ArithmeticProfile parse_profile(std::string_view text) {
  if (text == "reference") return ArithmeticProfile::kReference;
  if (text == "hardware") return ArithmeticProfile::kHardwareLike;
  throw ValidationError("unknown arithmetic profile '" + std::string(text) +
                        "' (expected reference or hardware)");
}

std::string to_string(ArithmeticProfile profile) {
  return profile == ArithmeticProfile::kReference ? "reference" : "hardware";
}

}  // namespace snnpat
