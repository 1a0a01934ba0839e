#pragma once

#include <map>
#include <vector>

#include "snnpat/network.h"

namespace snnpat {

struct RecordingRequest {
  std::vector<PopulationId> membrane_populations;  // LIF populations to trace
};

struct MembraneTrace {
  NeuronRef neuron;
  std::vector<double> v;  // mV after each step
};

struct PlasticSynapseState {
  Connection connection;  // weight field holds the final stored weight
  double raw_delta = 0.0;  // unclipped sum of every committed kernel term
  SynapseHistory history;
};

struct Recording {
  std::vector<SpikeEvent> spikes;  // sorted by (time, population, index)
  std::vector<MembraneTrace> traces;
  std::map<std::size_t, std::vector<PlasticSynapseState>> plastic;  // by projection index

  std::vector<int> spike_times(NeuronRef neuron) const;
  std::size_t spike_count(PopulationId population) const;
};

/// Steps t = 0 .. duration-1. Within a step every neuron sums all arriving
/// weights (as integer LSB counts) before a single membrane update, so event
/// order never matters. Plastic rows record post spikes before handling the
/// step's pre spikes; the weight a pre spike delivers is the post-update one.
/// Throws ValidationError for a malformed spec or duration < 1.
Recording run_network(const NetworkSpec& spec, int duration, const RecordingRequest& request = {});

}  // namespace snnpat
