#include "snnpat/oracle.h"

#include <algorithm>
#include <cmath>

#include "snnpat/errors.h"

namespace snnpat::oracle {

namespace {

constexpr std::int64_t kUnitLsb = 752;
constexpr double kGap = 15.0;  // v_thresh - v_rest, mV
constexpr double kTick = 0.00001;

void check_widths(std::span<const CodeWord> trained, const CodeWord& word) {
  if (trained.empty()) throw ValidationError("oracle: empty trained set");
  for (const auto& t : trained) {
    if (t.n_bits() != word.n_bits()) throw ValidationError("oracle: width mismatch");
  }
}

int differing_bits(std::uint64_t a, std::uint64_t b) {
  int n = 0;
  for (std::uint64_t x = a ^ b; x != 0; x &= x - 1) ++n;
  return n;
}

double decay(ArithmeticProfile profile) {
  const double a = std::exp(-1.0 / 20.0);
  if (profile == ArithmeticProfile::kReference) return a;
  return std::round(a * 32768.0) / 32768.0;
}

struct Drive {
  std::int64_t lsb;
};

Drive drive_lsb(std::span<const CodeWord> trained, double h, const CodeWord& word,
                ArithmeticProfile profile) {
  const int n = word.n_bits();
  const auto k = static_cast<std::int64_t>(trained.size());

  // Grid exponent s: synapses are multiples of 2^s LSB.
  int s = 0;
  if (profile == ArithmeticProfile::kHardwareLike) {
    std::int64_t widest = 0;
    for (int bit = 0; bit < n; ++bit) {
      std::int64_t ones = 0;
      for (const auto& t : trained) ones += static_cast<std::int64_t>((t.value() >> bit) & 1U);
      widest = std::max({widest, ones, k - ones});
    }
    const double largest = h * static_cast<double>(widest) * (kUnitLsb / 2048.0);
    while (std::ldexp(1.0, s) < largest) ++s;
  }
  auto q = [s](double lsb) { return std::llround(std::ldexp(lsb, -s)) << s; };

  Drive d{0};
  for (int bit = 0; bit < n; ++bit) {
    const auto b = (word.value() >> bit) & 1U;
    std::int64_t agree = 0;
    for (const auto& t : trained) agree += ((t.value() >> bit) & 1U) == b ? 1 : 0;
    d.lsb += q(h * static_cast<double>(agree) * kUnitLsb) -
             q(h * static_cast<double>(k - agree) * kUnitLsb);
  }
  return d;
}

}  // namespace

int unit_contribution(std::span<const CodeWord> trained, const CodeWord& word) {
  check_widths(trained, word);
  int c = 0;
  for (const auto& t : trained) c += word.n_bits() - 2 * differing_bits(t.value(), word.value());
  return c;
}

bool oracle_classify(std::span<const CodeWord> trained, double h, const CodeWord& word,
                     ArithmeticProfile profile) {
  check_widths(trained, word);
  const double kappa = 20.0 * (1.0 - decay(profile));
  const Drive d = drive_lsb(trained, h, word, profile);
  return -65.0 + (static_cast<double>(d.lsb) / 2048.0) * kappa >= -65.0 + kGap;
}

std::vector<std::uint64_t> oracle_firing_set(std::span<const CodeWord> trained, double h,
                                             ArithmeticProfile profile) {
  if (trained.empty()) throw ValidationError("oracle: empty trained set");
  const int n = trained.front().n_bits();
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (oracle_classify(trained, h, CodeWord(v, n), profile)) out.push_back(v);
  }
  return out;
}

OracleFactors oracle_min_factor(std::span<const CodeWord> trained, ArithmeticProfile profile) {
  OracleFactors out;
  std::optional<std::int64_t> best;
  for (const auto& w : trained) {
    if (unit_contribution(trained, w) <= 0) {
      out.per_pattern_ticks.push_back(std::nullopt);
      out.dropped.push_back(w);
      continue;
    }
    auto fires = [&](double h) { return oracle_classify(trained, h, w, profile); };
    if (fires(0.0001)) throw DegenerateInput("oracle: fires at the smallest factor");
    double lo = 0.0001;
    double hi = 1000.0;
    while (hi - lo > 0.0001) {
      const double mid = (lo + hi) / 2.0;
      if (fires(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    std::int64_t tick = std::max<std::int64_t>(std::llround((lo - kTick) * 100000.0), 10);
    while (tick < 100000000 && !fires(static_cast<double>(tick) / 100000.0)) ++tick;
    out.per_pattern_ticks.push_back(tick);
    if (!best || tick > *best) best = tick;
  }
  if (!best) throw InfiniteHomeostasis("oracle: every trained word has contribution <= 0");
  out.network_ticks = *best;
  return out;
}

}  // namespace snnpat::oracle
