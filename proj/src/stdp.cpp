#include "snnpat/stdp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "snnpat/errors.h"

namespace snnpat {

void StdpParams::validate() const {
  if (!(tau_plus > 0.0) || !(tau_minus > 0.0)) {
    throw ValidationError("stdp params: time constants must be positive");
  }
  if (!std::isfinite(a_plus) || !std::isfinite(a_minus)) {
    throw ValidationError("stdp params: amplitudes must be finite");
  }
}

double stdp_kernel(int dt, const StdpParams& params) {
  if (dt > 0) return params.a_plus * std::exp(-dt / params.tau_plus);
  if (dt < 0) return params.a_minus * std::exp(dt / params.tau_minus);
  return 0.0;
}

void record_post_spike(SynapseHistory& history, int t_post) {
  if (history.post_time && t_post < *history.post_time) {
    throw ContractViolation("record_post_spike: post spike at " + std::to_string(t_post) +
                            " precedes recorded post at " + std::to_string(*history.post_time));
  }
  history.post_time = t_post;
  history.post_pending = true;
}

PreSpikeOutcome process_pre_spike(const SynapseHistory& history, int t_pre,
                                  const StdpParams& params, double w, double w_max) {
  if (!history.pre_times.empty() && t_pre <= history.pre_times.back()) {
    throw ContractViolation("process_pre_spike: pre spike at " + std::to_string(t_pre) +
                            " is not after recorded pre at " +
                            std::to_string(history.pre_times.back()));
  }
  if (history.post_time && t_pre < *history.post_time) {
    throw ContractViolation("process_pre_spike: pre spike at " + std::to_string(t_pre) +
                            " precedes recorded post at " + std::to_string(*history.post_time));
  }

  PreSpikeOutcome out;
  out.weight = w;
  out.history = history;

  if (!history.pre_times.empty() && history.post_time && history.post_pending) {
    const int t_post = *history.post_time;
    std::optional<int> before;
    std::optional<int> after;
    for (int t : history.pre_times) {
      if (t < t_post) before = t;
      if (t > t_post && !after) after = t;
    }
    if (!after && t_pre > t_post) after = t_pre;

    if (before) out.delta += stdp_kernel(t_post - *before, params);
    if (after) out.delta += stdp_kernel(t_post - *after, params);
    out.weight = std::clamp(w + out.delta, 0.0, w_max);
    out.committed = true;
    out.history.post_pending = false;
  }

  auto& pres = out.history.pre_times;
  pres.push_back(t_pre);
  if (pres.size() > SynapseHistory::kPreCapacity) pres.erase(pres.begin());
  return out;
}

}  // namespace snnpat
