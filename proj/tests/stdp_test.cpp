#include <gtest/gtest.h>

#include <cmath>

#include "snnpat/errors.h"
#include "snnpat/stdp.h"

using namespace snnpat;

namespace {

SynapseHistory history_of(std::vector<int> pres, std::optional<int> post, bool pending = true) {
  SynapseHistory h;
  h.pre_times = std::move(pres);
  h.post_time = post;
  h.post_pending = post.has_value() && pending;
  return h;
}

}  // namespace

TEST(StdpKernel, Defaults) {
  const StdpParams p;
  EXPECT_NEAR(stdp_kernel(5, p), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(stdp_kernel(-5, p), -std::exp(-1.0), 1e-12);
  EXPECT_NEAR(stdp_kernel(25, p), std::exp(-5.0), 1e-12);
  EXPECT_NEAR(stdp_kernel(-25, p), -std::exp(-5.0), 1e-12);
  EXPECT_NEAR(stdp_kernel(5, p), 0.367879, 1e-6);
  EXPECT_NEAR(stdp_kernel(25, p), 0.006738, 1e-6);
  EXPECT_EQ(stdp_kernel(0, p), 0.0);
}

TEST(StdpParams, Validation) {
  StdpParams p;
  EXPECT_NO_THROW(p.validate());
  p.tau_minus = 0.0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(ProcessPreSpike, OnePresentationCommitsLtpThenLtd) {
  const auto out = process_pre_spike(history_of({27}, 32), 57, {}, 0.0, 16.0);
  EXPECT_TRUE(out.committed);
  EXPECT_NEAR(out.delta, std::exp(-1.0) - std::exp(-5.0), 1e-12);
  EXPECT_NEAR(out.delta, 0.361141, 1e-6);
  EXPECT_NEAR(out.weight, out.delta, 1e-15);
  EXPECT_FALSE(out.history.post_pending);
  EXPECT_EQ(out.history.pre_times, (std::vector<int>{27, 57}));
}

TEST(ProcessPreSpike, ZeroPresentationIsClippedAtZero) {
  const auto out = process_pre_spike(history_of({7}, 32), 37, {}, 0.0, 16.0);
  EXPECT_TRUE(out.committed);
  EXPECT_NEAR(out.delta, std::exp(-5.0) - std::exp(-1.0), 1e-12);
  EXPECT_EQ(out.weight, 0.0);
}

TEST(ProcessPreSpike, NoPostMeansNoUpdate) {
  const auto out = process_pre_spike(history_of({2}, std::nullopt), 27, {}, 0.5, 16.0);
  EXPECT_FALSE(out.committed);
  EXPECT_EQ(out.weight, 0.5);
  EXPECT_EQ(out.delta, 0.0);
  EXPECT_EQ(out.history.pre_times, (std::vector<int>{2, 27}));
}

TEST(ProcessPreSpike, NoEarlierPreMeansNoUpdate) {
  const auto out = process_pre_spike(history_of({}, 32), 70, {}, 0.0, 16.0);
  EXPECT_FALSE(out.committed);
  EXPECT_TRUE(out.history.post_pending);
}

TEST(ProcessPreSpike, EachPairCommitsOnce) {
  auto first = process_pre_spike(history_of({27}, 32), 57, {}, 0.0, 16.0);
  const auto second = process_pre_spike(first.history, 70, {}, first.weight, 16.0);
  EXPECT_FALSE(second.committed);
  EXPECT_EQ(second.weight, first.weight);
}

TEST(ProcessPreSpike, BufferedLaterPreIsTheLtdPartner) {
  // Pre spikes 27 and 57 bracket the post; the flush at 70 is not nearest.
  const auto out = process_pre_spike(history_of({27, 57}, 32), 70, {}, 0.0, 16.0);
  EXPECT_NEAR(out.delta, std::exp(-1.0) - std::exp(-5.0), 1e-12);
}

TEST(ProcessPreSpike, FlushIsIdempotent) {
  const auto flush = process_pre_spike(history_of({2, 27}, 32), 70, {}, 0.0, 16.0);
  EXPECT_TRUE(flush.committed);
  EXPECT_NEAR(flush.delta, std::exp(-1.0) - std::exp(-38.0 / 5.0), 1e-12);
  const auto again = process_pre_spike(flush.history, 71, {}, flush.weight, 16.0);
  EXPECT_FALSE(again.committed);
  EXPECT_EQ(again.weight, flush.weight);
}

TEST(ProcessPreSpike, ClipsAtWMax) {
  const auto out = process_pre_spike(history_of({31}, 32), 40, {}, 15.9, 16.0);
  EXPECT_EQ(out.weight, 16.0);
  EXPECT_GT(out.delta, 0.1);
}

TEST(ProcessPreSpike, OutOfOrderIsAContractViolation) {
  EXPECT_THROW(process_pre_spike(history_of({27}, std::nullopt), 27, {}, 0.0, 16.0), ContractViolation);
  EXPECT_THROW(process_pre_spike(history_of({27}, std::nullopt), 20, {}, 0.0, 16.0), ContractViolation);
  EXPECT_THROW(process_pre_spike(history_of({27}, 32), 31, {}, 0.0, 16.0), ContractViolation);
}

TEST(ProcessPreSpike, CoincidentPreAndPostContributeNothing) {
  const auto out = process_pre_spike(history_of({32}, 32), 40, {}, 1.0, 16.0);
  EXPECT_TRUE(out.committed);
  EXPECT_NEAR(out.delta, stdp_kernel(-8, {}), 1e-15);
}

TEST(RecordPostSpike, NewerPostReplacesPending) {
  SynapseHistory h = history_of({2}, 10);
  record_post_spike(h, 12);
  EXPECT_EQ(h.post_time, 12);
  EXPECT_TRUE(h.post_pending);
  EXPECT_THROW(record_post_spike(h, 11), ContractViolation);
}

TEST(ProcessPreSpike, PresentationAntisymmetry) {
  // "1": pres 2, 27, 57 with post 32. "0": pres 7, 37, 60 with post 32.
  auto run = [](std::vector<int> pres) {
    SynapseHistory h;
    double raw = 0.0;
    for (int t : pres) {
      if (t > 32 && !h.post_time) record_post_spike(h, 32);
      const auto out = process_pre_spike(h, t, {}, 0.0, 16.0);
      raw += out.delta;
      h = out.history;
    }
    return raw;
  };
  const double one = run({2, 27, 57, 70});
  const double zero = run({7, 37, 60, 70});
  EXPECT_NEAR(one, -zero, 1e-9);
  EXPECT_GT(one, 0.0);
}
