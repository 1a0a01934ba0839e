#include "snnpat/homeostasis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "snnpat/classifier.h"
#include "snnpat/errors.h"

namespace snnpat {

std::string format_factor(GridFactor f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", f.value());
  return buf;
}

bool pattern_fires(const TrainedWeights& weights, double h, const CodeWord& word,
                   ArithmeticProfile profile) {
  return output_spike_count(build_testing_network(weights, h, profile), word) == 1;
}

std::optional<GridFactor> min_factor_for_pattern(const TrainedWeights& weights,
                                                 const CodeWord& word,
                                                 ArithmeticProfile profile) {
  auto fires = [&](double h) { return pattern_fires(weights, h, word, profile); };

  if (fires(kSearchLow)) {
    throw DegenerateInput("code word " + to_string(word) +
                          " fires at the smallest search factor; weights look corrupt");
  }
  if (!fires(kSearchHigh)) return std::nullopt;

  double x = kSearchLow;  // never fires
  double y = kSearchHigh;  // fires
  while (y - x > kBisectionWidth) {
    const double mid = (x + y) / 2.0;
    (fires(mid) ? y : x) = mid;
  }

  const std::int64_t per = GridFactor::kTicksPerUnit;
  const std::int64_t first = std::max<std::int64_t>(std::llround((x - 0.00001) * per),
                                                    std::llround(kSearchLow * per));
  const std::int64_t last = std::llround(kSearchHigh * per);
  for (std::int64_t t = first; t <= last; ++t) {
    if (fires(GridFactor{t}.value())) return GridFactor{t};
  }
  return GridFactor{last};
}

HomeostasisResult network_factor(const TrainedWeights& weights, ArithmeticProfile profile) {
  HomeostasisResult out;
  std::optional<GridFactor> best;
  for (const auto& w : weights.trained_codewords) {
    const auto f = min_factor_for_pattern(weights, w, profile);
    out.per_pattern.push_back({w, f});
    if (!f) {
      out.dropped.push_back(w);
    } else if (!best || *f > *best) {
      best = f;
    }
  }
  if (!best) throw InfiniteHomeostasis("infinite homeostatic factor: no trained pattern can fire");
  out.network_factor = *best;
  return out;
}

}  // namespace snnpat
