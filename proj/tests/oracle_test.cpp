#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "snnpat/errors.h"
#include "snnpat/oracle.h"

using namespace snnpat;
using namespace snnpat::oracle;

namespace {

std::vector<CodeWord> words(std::initializer_list<std::uint64_t> values) {
  std::vector<CodeWord> out;
  for (auto v : values) out.emplace_back(v, 10);
  return out;
}

}  // namespace

TEST(UnitContribution, MixedTriple) {
  const auto t = words({0, 1, 2});
  EXPECT_EQ(unit_contribution(t, CodeWord(0, 10)), 26);
  EXPECT_EQ(unit_contribution(t, CodeWord(1, 10)), 24);
  EXPECT_EQ(unit_contribution(t, CodeWord(2, 10)), 24);
}

TEST(UnitContribution, FullAgreementAndDisagreement) {
  const auto t = words({613});
  EXPECT_EQ(unit_contribution(t, CodeWord(613, 10)), 10);
  EXPECT_EQ(unit_contribution(t, CodeWord(613, 10).complement()), -10);
}

TEST(UnitContribution, HammingIdentityAndBound) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> any(0, 1023);
  for (int k = 0; k < 200; ++k) {
    const std::vector<CodeWord> t{CodeWord(any(rng), 10), CodeWord(any(rng), 10), CodeWord(any(rng), 10)};
    const CodeWord w(any(rng), 10);
    int expected = 0;
    for (const auto& x : t) expected += 10 - 2 * std::popcount(x.value() ^ w.value());
    EXPECT_EQ(unit_contribution(t, w), expected);
    EXPECT_LE(std::abs(expected), 30);
  }
}

TEST(UnitContribution, WidthMismatch) {
  const auto t = words({1});
  EXPECT_THROW(unit_contribution(t, CodeWord(1, 11)), ValidationError);
}

TEST(OracleClassify, SinglePatternBoundary) {
  const auto t = words({992});
  EXPECT_NEAR(10 * 3150 / 2048.0 * 20 * (1 - std::exp(-0.05)), 15.0026, 1e-4);
  EXPECT_TRUE(oracle_classify(t, 4.18817, CodeWord(992, 10)));
  EXPECT_NEAR(4.18815 * 752, 3149.49, 0.005);
  EXPECT_FALSE(oracle_classify(t, 4.18815, CodeWord(992, 10)));
}

TEST(OracleClassify, ThreePatternsFireOnlyOnTrained) {
  const auto t = words({0, 1, 2});
  EXPECT_EQ(oracle_firing_set(t, 1.74513), (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(OracleMinFactor, KnownRows) {
  const OracleFactors a = oracle_min_factor(words({0, 1, 2}));
  EXPECT_LE(std::abs(a.network_ticks / 1e5 - 1.74513) / 1.74513, 0.005);
  EXPECT_TRUE(a.dropped.empty());

  // Contribution 2 -> h ~ 15 / (2 * 0.3671875 * kappa) = 20.94; displayed "21".
  const OracleFactors b = oracle_min_factor(words({0, 3, 252}));
  EXPECT_NEAR(b.network_ticks / 1e5, 41.883 / 2, 0.01);
  EXPECT_TRUE(b.dropped.empty());

  const OracleFactors c = oracle_min_factor(words({0, 31, 992}));
  EXPECT_EQ(c.dropped, words({31, 992}));
  EXPECT_NEAR(c.network_ticks / 1e5, 4.19, 0.01);
  EXPECT_FALSE(c.per_pattern_ticks[1].has_value());
}

TEST(OracleMinFactor, AllDroppedIsInfinite) {
  EXPECT_THROW(oracle_min_factor(words({992, 31})), InfiniteHomeostasis);
}

TEST(OracleMinFactor, GridMinimal) {
  const auto t = words({5, 600, 1000});
  const OracleFactors f = oracle_min_factor(t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!f.per_pattern_ticks[k]) continue;
    const std::int64_t ticks = *f.per_pattern_ticks[k];
    EXPECT_TRUE(oracle_classify(t, ticks / 1e5, t[k]));
    EXPECT_FALSE(oracle_classify(t, (ticks - 1) / 1e5, t[k]));
  }
}
