#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snnpat/fixed_weight.h"
#include "snnpat/neuron.h"
#include "snnpat/stdp.h"

namespace snnpat {

using PopulationId = std::size_t;

struct NeuronRef {
  PopulationId population = 0;
  std::size_t index = 0;

  auto operator<=>(const NeuronRef&) const = default;
};

struct SpikeEvent {
  int time = 0;  // ms
  NeuronRef neuron;

  auto operator<=>(const SpikeEvent&) const = default;
};

/// Neurons that fire on an explicit schedule; spike_times[i] belongs to neuron i.
struct SpikeSourceSpec {
  std::vector<std::vector<int>> spike_times;
};

struct LifPopulationSpec {
  std::size_t size = 0;
  NeuronParams params;
};

struct PopulationSpec {
  std::string label;
  std::variant<SpikeSourceSpec, LifPopulationSpec> kind;

  std::size_t size() const;
  bool is_source() const { return std::holds_alternative<SpikeSourceSpec>(kind); }
};

enum class SynapseSign { kExcitatory, kInhibitory };

struct Connection {
  std::size_t pre = 0;
  std::size_t post = 0;
  FixedWeight weight;
};

struct ProjectionSpec {
  PopulationId source = 0;
  PopulationId target = 0;
  std::vector<Connection> connections;
  SynapseSign sign = SynapseSign::kExcitatory;
  int delay = 1;  // ms
  std::optional<StdpParams> plasticity;
  double w_max = 16.0;  // plastic weights only
};

struct NetworkSpec {
  std::vector<PopulationSpec> populations;
  std::vector<ProjectionSpec> projections;

  PopulationId add_spike_source(std::string label, std::vector<std::vector<int>> spike_times);
  PopulationId add_lif_population(std::string label, std::size_t size, NeuronParams params = {});
  std::size_t add_projection(ProjectionSpec projection);

  /// Throws ValidationError naming the first broken invariant.
  void validate() const;
};

/// A static projection with the given sign and a 1 ms delay.
ProjectionSpec make_projection(PopulationId source, PopulationId target,
                               std::vector<Connection> connections,
                               SynapseSign sign = SynapseSign::kExcitatory);

/// Connects neuron i of the source to neuron i of the target for every i.
std::vector<Connection> one_to_one(std::size_t n, FixedWeight weight);

/// Connects every source neuron to every target neuron.
std::vector<Connection> all_to_all(std::size_t n_pre, std::size_t n_post, FixedWeight weight);

}  // namespace snnpat
