#pragma once

#include <optional>
#include <vector>

namespace snnpat {

struct StdpParams {
  double tau_plus = 5.0;   // ms
  double tau_minus = 5.0;  // ms
  double a_plus = 1.0;
  double a_minus = -1.0;

  void validate() const;
};

/// Pair-rule kernel for dt = t_post - t_pre. dt = 0 yields 0.
double stdp_kernel(int dt, const StdpParams& params);

/// Per-synapse spike memory for the deferred nearest-neighbour rule.
struct SynapseHistory {
  static constexpr std::size_t kPreCapacity = 2;

  std::vector<int> pre_times;     // oldest first, at most kPreCapacity
  std::optional<int> post_time;   // latest post spike
  bool post_pending = false;      // post_time not yet paired
};

/// Remembers a post spike. A newer post replaces an uncommitted older one
/// (only the nearest neighbour survives).
void record_post_spike(SynapseHistory& history, int t_post);

struct PreSpikeOutcome {
  double weight = 0.0;   // after the additive update and clipping to [0, w_max]
  double delta = 0.0;    // unclipped sum of committed kernel terms
  bool committed = false;
  SynapseHistory history;
};

/// Handles a new pre spike. If the history already holds a pre spike and an
/// uncommitted post spike, the post is paired once with its nearest earlier pre
/// (LTP) and once with its nearest later pre (LTD, possibly t_pre itself).
/// t_pre is then recorded. Throws ContractViolation if t_pre is not later than
/// every recorded pre time or is earlier than the recorded post time.
PreSpikeOutcome process_pre_spike(const SynapseHistory& history, int t_pre,
                                  const StdpParams& params, double w, double w_max);

}  // namespace snnpat
