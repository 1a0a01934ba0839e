#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snnpat/arithmetic_profile.h"
#include "snnpat/codeword.h"

// Closed-form model of the testing network. Deliberately independent of the
// simulator, classifier and search code: integer unit arithmetic plus the
// single-step drive formula.
namespace snnpat::oracle {

/// Sum over trained t of (n_bits - 2 * hamming(t, word)). Throws
/// ValidationError on a width mismatch or an empty trained set.
int unit_contribution(std::span<const CodeWord> trained, const CodeWord& word);

/// Quantized drive at factor h reaches the 15 mV gap to threshold.
bool oracle_classify(std::span<const CodeWord> trained, double h, const CodeWord& word,
                     ArithmeticProfile profile = ArithmeticProfile::kReference);

/// All firing word values at h, ascending.
std::vector<std::uint64_t> oracle_firing_set(std::span<const CodeWord> trained, double h,
                                             ArithmeticProfile profile = ArithmeticProfile::kReference);

struct OracleFactors {
  std::vector<std::optional<std::int64_t>> per_pattern_ticks;  // same order as the input
  std::int64_t network_ticks = 0;  // factor = ticks / 100000
  std::vector<CodeWord> dropped;
};

/// The factor search replayed against oracle_classify. A word is dropped iff
/// its unit contribution is <= 0. Throws InfiniteHomeostasis if all are.
OracleFactors oracle_min_factor(std::span<const CodeWord> trained,
                                ArithmeticProfile profile = ArithmeticProfile::kReference);

}  // namespace snnpat::oracle
