#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snnpat/arithmetic_profile.h"
#include "snnpat/codeword.h"
#include "snnpat/trainer.h"

namespace snnpat {

/// A scaling factor on the 0.00001 search grid, held as an integer tick count.
struct GridFactor {
  static constexpr std::int64_t kTicksPerUnit = 100000;

  std::int64_t ticks = 0;

  double value() const { return static_cast<double>(ticks) / kTicksPerUnit; }
  auto operator<=>(const GridFactor&) const = default;
};

inline constexpr double kSearchLow = 0.0001;
inline constexpr double kSearchHigh = 1000.0;
inline constexpr double kBisectionWidth = 0.0001;

/// Five decimals, e.g. "4.18817".
std::string format_factor(GridFactor f);

/// True iff the output emits exactly one spike for `word` at factor h.
bool pattern_fires(const TrainedWeights& weights, double h, const CodeWord& word,
                   ArithmeticProfile profile = ArithmeticProfile::kReference);

/// Bisection on [0.0001, 1000] down to width 0.0001, then an ascending scan
/// of the 0.00001 grid over [x - 0.00001, y + 0.00001]. nullopt when the word
/// cannot fire even at 1000. Throws DegenerateInput if it fires at 0.0001.
std::optional<GridFactor> min_factor_for_pattern(
    const TrainedWeights& weights, const CodeWord& word,
    ArithmeticProfile profile = ArithmeticProfile::kReference);

struct PatternFactor {
  CodeWord word;
  std::optional<GridFactor> factor;  // nullopt: unreachable
};

struct HomeostasisResult {
  GridFactor network_factor;
  std::vector<PatternFactor> per_pattern;  // trained order
  std::vector<CodeWord> dropped;
};

/// Searches every trained word and takes the largest reachable factor.
/// Throws InfiniteHomeostasis when no trained word is reachable.
HomeostasisResult network_factor(const TrainedWeights& weights,
                                 ArithmeticProfile profile = ArithmeticProfile::kReference);

}  // namespace snnpat
