#include "snnpat/simulation.h"

#include <algorithm>
#include <cstdint>

#include "snnpat/errors.h"

namespace snnpat {

std::vector<int> Recording::spike_times(NeuronRef neuron) const {
  std::vector<int> out;
  for (const auto& s : spikes) {
    if (s.neuron == neuron) out.push_back(s.time);
  }
  return out;
}

std::size_t Recording::spike_count(PopulationId population) const {
  return static_cast<std::size_t>(std::count_if(
      spikes.begin(), spikes.end(), [&](const SpikeEvent& s) { return s.neuron.population == population; }));
}

namespace {

struct PopulationRuntime {
  std::size_t size = 0;
  const SpikeSourceSpec* source = nullptr;
  const LifPopulationSpec* lif = nullptr;
  std::vector<std::size_t> cursor;          // sources: next schedule entry per neuron
  std::vector<NeuronState> state;           // LIF
  std::vector<std::int64_t> input;          // LIF: ring of (slot, neuron) LSB sums
  std::vector<std::size_t> outgoing;        // projection indices
  std::vector<std::size_t> trace_slot;      // index into Recording::traces, or npos
};

struct ProjectionRuntime {
  std::vector<std::vector<std::size_t>> by_pre;
  std::vector<std::vector<std::size_t>> by_post;  // plastic only
  std::vector<PlasticSynapseState> plastic;
};

constexpr std::size_t kNoTrace = static_cast<std::size_t>(-1);

}  // namespace

Recording run_network(const NetworkSpec& spec, int duration, const RecordingRequest& request) {
  if (duration < 1) throw ValidationError("run_network: duration must be >= 1 ms");
  spec.validate();

  int max_delay = 1;
  for (const auto& proj : spec.projections) max_delay = std::max(max_delay, proj.delay);
  const auto ring = static_cast<std::size_t>(max_delay) + 1;

  Recording rec;
  std::vector<PopulationRuntime> pops(spec.populations.size());
  for (std::size_t p = 0; p < pops.size(); ++p) {
    auto& rt = pops[p];
    const auto& ps = spec.populations[p];
    rt.size = ps.size();
    if (ps.is_source()) {
      rt.source = &std::get<SpikeSourceSpec>(ps.kind);
      rt.cursor.assign(rt.size, 0);
    } else {
      rt.lif = &std::get<LifPopulationSpec>(ps.kind);
      rt.state.assign(rt.size, NeuronState::at_rest(rt.lif->params));
      rt.input.assign(ring * rt.size, 0);
    }
    rt.trace_slot.assign(rt.size, kNoTrace);
  }
  for (PopulationId p : request.membrane_populations) {
    if (p >= pops.size() || !pops[p].lif) {
      throw ValidationError("run_network: membrane trace requested for a non-LIF population");
    }
    for (std::size_t i = 0; i < pops[p].size; ++i) {
      if (pops[p].trace_slot[i] != kNoTrace) continue;
      pops[p].trace_slot[i] = rec.traces.size();
      rec.traces.push_back({{p, i}, {}});
      rec.traces.back().v.reserve(static_cast<std::size_t>(duration));
    }
  }

  std::vector<ProjectionRuntime> projs(spec.projections.size());
  for (std::size_t j = 0; j < projs.size(); ++j) {
    const auto& proj = spec.projections[j];
    auto& rt = projs[j];
    pops[proj.source].outgoing.push_back(j);
    rt.by_pre.resize(pops[proj.source].size);
    for (std::size_t c = 0; c < proj.connections.size(); ++c) {
      rt.by_pre[proj.connections[c].pre].push_back(c);
    }
    if (proj.plasticity) {
      rt.by_post.resize(pops[proj.target].size);
      for (std::size_t c = 0; c < proj.connections.size(); ++c) {
        rt.by_post[proj.connections[c].post].push_back(c);
        rt.plastic.push_back({proj.connections[c], 0.0, {}});
      }
    }
  }

  std::vector<std::vector<std::size_t>> fired(pops.size());
  for (int t = 0; t < duration; ++t) {
    const std::size_t slot = static_cast<std::size_t>(t) % ring;

    for (std::size_t p = 0; p < pops.size(); ++p) {
      auto& rt = pops[p];
      fired[p].clear();
      if (rt.source) {
        for (std::size_t i = 0; i < rt.size; ++i) {
          const auto& times = rt.source->spike_times[i];
          if (rt.cursor[i] < times.size() && times[rt.cursor[i]] == t) {
            fired[p].push_back(i);
            ++rt.cursor[i];
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < rt.size; ++i) {
        std::int64_t& lsb = rt.input[slot * rt.size + i];
        const double current = static_cast<double>(lsb) * kWeightLsb;
        lsb = 0;
        const StepResult r = membrane_step(rt.state[i], rt.lif->params, current);
        rt.state[i] = r.state;
        if (r.fired) fired[p].push_back(i);
        if (rt.trace_slot[i] != kNoTrace) rec.traces[rt.trace_slot[i]].v.push_back(r.state.v);
      }
    }

    for (std::size_t p = 0; p < pops.size(); ++p) {
      for (std::size_t i : fired[p]) rec.spikes.push_back({t, {p, i}});
    }

    for (std::size_t j = 0; j < projs.size(); ++j) {
      const auto& proj = spec.projections[j];
      if (!proj.plasticity) continue;
      for (std::size_t i : fired[proj.target]) {
        for (std::size_t c : projs[j].by_post[i]) record_post_spike(projs[j].plastic[c].history, t);
      }
    }

    for (std::size_t p = 0; p < pops.size(); ++p) {
      for (std::size_t j : pops[p].outgoing) {
        const auto& proj = spec.projections[j];
        auto& prt = projs[j];
        auto& target = pops[proj.target];
        const std::size_t arrive = static_cast<std::size_t>(t + proj.delay) % ring;
        for (std::size_t i : fired[p]) {
          for (std::size_t c : prt.by_pre[i]) {
            FixedWeight w = proj.connections[c].weight;
            if (proj.plasticity) {
              auto& syn = prt.plastic[c];
              const PreSpikeOutcome out = process_pre_spike(syn.history, t, *proj.plasticity,
                                                            syn.connection.weight.value(), proj.w_max);
              syn.history = out.history;
              if (out.committed) {
                syn.raw_delta += out.delta;
                syn.connection.weight = quantize_weight(out.weight);
              }
              w = syn.connection.weight;
            }
            const auto lsb = static_cast<std::int64_t>(w.lsb_count());
            target.input[arrive * target.size + proj.connections[c].post] +=
                proj.sign == SynapseSign::kExcitatory ? lsb : -lsb;
          }
        }
      }
    }
  }

  for (std::size_t j = 0; j < projs.size(); ++j) {
    if (spec.projections[j].plasticity) rec.plastic[j] = std::move(projs[j].plastic);
  }
  return rec;
}

}  // namespace snnpat
