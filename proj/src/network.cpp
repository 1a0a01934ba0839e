#include "snnpat/network.h"

#include "snnpat/errors.h"

namespace snnpat {

std::size_t PopulationSpec::size() const {
  if (const auto* src = std::get_if<SpikeSourceSpec>(&kind)) return src->spike_times.size();
  return std::get<LifPopulationSpec>(kind).size;
}

PopulationId NetworkSpec::add_spike_source(std::string label,
                                           std::vector<std::vector<int>> spike_times) {
  populations.push_back({std::move(label), SpikeSourceSpec{std::move(spike_times)}});
  return populations.size() - 1;
}

PopulationId NetworkSpec::add_lif_population(std::string label, std::size_t size,
                                             NeuronParams params) {
  populations.push_back({std::move(label), LifPopulationSpec{size, params}});
  return populations.size() - 1;
}

std::size_t NetworkSpec::add_projection(ProjectionSpec projection) {
  projections.push_back(std::move(projection));
  return projections.size() - 1;
}

void NetworkSpec::validate() const {
  for (std::size_t p = 0; p < populations.size(); ++p) {
    const auto& pop = populations[p];
    const std::string where = "population " + std::to_string(p) + " (" + pop.label + ")";
    if (const auto* src = std::get_if<SpikeSourceSpec>(&pop.kind)) {
      for (const auto& times : src->spike_times) {
        for (std::size_t k = 0; k < times.size(); ++k) {
          if (times[k] < 0) throw ValidationError(where + ": negative spike time");
          if (k > 0 && times[k] <= times[k - 1]) {
            throw ValidationError(where + ": spike times must be strictly increasing");
          }
        }
      }
    } else {
      std::get<LifPopulationSpec>(pop.kind).params.validate();
    }
  }

  for (std::size_t j = 0; j < projections.size(); ++j) {
    const auto& proj = projections[j];
    const std::string where = "projection " + std::to_string(j);
    if (proj.source >= populations.size() || proj.target >= populations.size()) {
      throw ValidationError(where + ": references a missing population");
    }
    if (populations[proj.target].is_source()) {
      throw ValidationError(where + ": target is a spike source");
    }
    if (proj.delay < 1) throw ValidationError(where + ": delay must be a whole ms >= 1");
    if (proj.plasticity) {
      proj.plasticity->validate();
      if (!(proj.w_max > 0.0) || proj.w_max > kMaxWeight) {
        throw ValidationError(where + ": w_max out of range");
      }
    }
    const std::size_t n_pre = populations[proj.source].size();
    const std::size_t n_post = populations[proj.target].size();
    for (const auto& c : proj.connections) {
      if (c.pre >= n_pre || c.post >= n_post) {
        throw ValidationError(where + ": connection index out of range");
      }
    }
  }
}

ProjectionSpec make_projection(PopulationId source, PopulationId target,
                               std::vector<Connection> connections, SynapseSign sign) {
  ProjectionSpec p;
  p.source = source;
  p.target = target;
  p.connections = std::move(connections);
  p.sign = sign;
  return p;
}

std::vector<Connection> one_to_one(std::size_t n, FixedWeight weight) {
  std::vector<Connection> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({i, i, weight});
  return out;
}

std::vector<Connection> all_to_all(std::size_t n_pre, std::size_t n_post, FixedWeight weight) {
  std::vector<Connection> out;
  out.reserve(n_pre * n_post);
  for (std::size_t i = 0; i < n_pre; ++i) {
    for (std::size_t k = 0; k < n_post; ++k) out.push_back({i, k, weight});
  }
  return out;
}

}  // namespace snnpat
