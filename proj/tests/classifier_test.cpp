#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "snnpat/classifier.h"
#include "snnpat/errors.h"

using namespace snnpat;

namespace {

TrainedWeights trained(std::initializer_list<std::uint64_t> values, int n_bits = 10) {
  std::vector<CodeWord> ws;
  for (auto v : values) ws.emplace_back(v, n_bits);
  return train_set(ws);
}

std::uint64_t magnitude(const TestingNetwork& net, std::size_t projection, std::size_t bit) {
  return net.spec.projections[projection].connections[bit].weight.lsb_count();
}

}  // namespace

TEST(BuildTestingNetwork, SinglePatternRescaledWeights) {
  const TestingNetwork net = build_testing_network(trained({992}), 4.18817);
  // projections: injector0 exc, injector0 inh, injector1 exc, injector1 inh
  ASSERT_EQ(net.spec.projections.size(), 4u);
  int nonzero = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t i = 0; i < 10; ++i) {
      const auto m = magnitude(net, p, i);
      if (m != 0) {
        EXPECT_EQ(m, 3150u);
        ++nonzero;
      }
    }
  }
  EXPECT_EQ(nonzero, 20);  // ten excitatory + their ten inhibitory mirrors
  EXPECT_EQ(magnitude(net, 2, 9), 3150u);  // injector1 excitatory at a "1" bit
  EXPECT_EQ(magnitude(net, 1, 9), 3150u);  // injector0 inhibitory mirror
  EXPECT_EQ(magnitude(net, 0, 9), 0u);
  EXPECT_NEAR(FixedWeight::from_lsb(3150).value(), 1.538, 5e-4);
}

TEST(BuildTestingNetwork, DontCareBitCancels) {
  const TestingNetwork net = build_testing_network(trained({992, 960}), 1.0);
  for (std::size_t p = 0; p < 4; ++p) EXPECT_EQ(magnitude(net, p, 5), 752u);
  EXPECT_EQ(net.spec.projections[0].sign, SynapseSign::kExcitatory);
  EXPECT_EQ(net.spec.projections[1].sign, SynapseSign::kInhibitory);
}

TEST(BuildTestingNetwork, RejectsNonPositiveFactor) {
  EXPECT_THROW(build_testing_network(trained({1}), 0.0), ContractViolation);
  EXPECT_THROW(build_testing_network(trained({1}), -2.0), ContractViolation);
}

TEST(Classify, VanishingFactorNeverFires) {
  const TrainedWeights w = trained({992});
  EXPECT_FALSE(classify(w, 0.0001, CodeWord(992, 10)));
  EXPECT_EQ(evaluate_exhaustive(w, 0.0001).positives(), 0u);
}

TEST(Classify, SinglePattern) {
  const TrainedWeights w = trained({992});
  EXPECT_TRUE(classify(w, 4.18817, CodeWord(992, 10)));
  EXPECT_FALSE(classify(w, 4.18815, CodeWord(992, 10)));
  EXPECT_EQ(firing_set(w, 4.18817), std::vector<std::uint64_t>{992});
}

TEST(Classify, TwoPatternsAtSearchedFactor) {
  const TrainedWeights w = trained({992, 960});
  EXPECT_EQ(firing_set(w, 2.3268), (std::vector<std::uint64_t>{960, 992}));
}

TEST(EvaluateExhaustive, CountsAndInvariants) {
  const TrainedWeights w = trained({992, 16});
  const ConfusionCounts c = evaluate_exhaustive(w, 5.23504);
  EXPECT_EQ(c, (ConfusionCounts{2, 960, 62, 0}));
  EXPECT_EQ(c.total(), 1024u);
  EXPECT_EQ(c.positives(), 64u);
  EXPECT_EQ(c.negatives(), 960u);
  EXPECT_EQ(evaluate_exhaustive(w, 5.23504, ArithmeticProfile::kReference, 1), c);
}

TEST(EvaluateExhaustive, DroppedWordsAreFalseNegatives) {
  const ConfusionCounts c = evaluate_exhaustive(trained({0, 31, 992}), 4.19016);
  EXPECT_EQ(c, (ConfusionCounts{1, 1021, 0, 2}));
}

TEST(EvaluateExhaustive, WidthBound) {
  TrainedWeights w;
  w.n_bits = 25;
  w.pop0_units.assign(25, 1);
  w.pop1_units.assign(25, 0);
  w.trained_codewords = {CodeWord(0, 25)};
  EXPECT_THROW(evaluate_exhaustive(w, 1.0), ValidationError);
}

TEST(EvaluateExhaustive, FiringSetsNest) {
  const TrainedWeights w = trained({0, 1, 126});
  std::vector<std::uint64_t> prev;
  for (double h : {5.0, 8.0, 10.47053, 12.0, 20.0}) {
    const auto cur = firing_set(w, h);
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << h;
    prev = cur;
  }
}

TEST(ComputeMetrics, KnownRows) {
  const ClassificationReport all = compute_metrics({1, 1023, 0, 0});
  for (const auto& m : {all.accuracy, all.precision, all.negative_prediction, all.sensitivity,
                        all.specificity}) {
    ASSERT_TRUE(m.has_value());
    EXPECT_DOUBLE_EQ(*m, 1.0);
  }
  const ClassificationReport hd5 = compute_metrics({2, 992, 30, 0});
  EXPECT_NEAR(*hd5.accuracy, 0.971, 5e-4);
  EXPECT_DOUBLE_EQ(*hd5.precision, 0.0625);
  EXPECT_DOUBLE_EQ(*hd5.sensitivity, 1.0);
  const ClassificationReport triple = compute_metrics({3, 1021, 0, 0});
  EXPECT_DOUBLE_EQ(*triple.specificity, 1.0);
}

TEST(ComputeMetrics, ZeroDenominatorIsUndefined) {
  const ClassificationReport m = compute_metrics({0, 1024, 0, 0});
  EXPECT_FALSE(m.precision.has_value());
  EXPECT_FALSE(m.sensitivity.has_value());
  EXPECT_DOUBLE_EQ(*m.accuracy, 1.0);
  const ClassificationReport all_fire = compute_metrics({0, 0, 1024, 0});
  EXPECT_FALSE(all_fire.negative_prediction.has_value());
  EXPECT_DOUBLE_EQ(*all_fire.precision, 0.0);
}

TEST(NetUnits, MatchesTheUnitTable) {
  const TrainedWeights w = trained({0, 1, 2});
  EXPECT_EQ(net_units(w, CodeWord(0, 10)), 26);
  EXPECT_EQ(net_units(w, CodeWord(1, 10)), 24);
  EXPECT_EQ(net_units(w, CodeWord(2, 10)), 24);
  EXPECT_EQ(net_units(trained({992}), CodeWord(31, 10)), -10);
}
