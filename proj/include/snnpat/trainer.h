#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snnpat/codeword.h"
#include "snnpat/fixed_weight.h"
#include "snnpat/simulation.h"

namespace snnpat {

/// One trained synapse increment: 0.3671875 weight units.
inline constexpr std::uint64_t kUnitWeightLsb = 752;
inline constexpr double kUnitWeight = kUnitWeightLsb * kWeightLsb;

/// Source emission times for one presentation. Each source relays through an
/// LIF neuron one step later, which is when the plastic synapse sees the spike.
struct TrainingSchedule {
  std::vector<int> one_times{1, 26, 56};
  std::vector<int> zero_times{6, 36, 59};
  int teacher_time = 30;
  std::optional<int> save_time = 69;
  int duration = 80;
  double drive_weight = 20.0;  // source->relay and teacher weights (supra-threshold)
  StdpParams stdp;

  static TrainingSchedule standard() { return {}; }
};

/// Everything one presentation leaves behind, before canonicalization.
struct TrainingRun {
  std::vector<int> output_spikes;
  // Indexed [population][bit]; population 0 is the "0" injector population.
  std::array<std::vector<double>, 2> raw_delta;
  std::array<std::vector<FixedWeight>, 2> stored;
  std::array<std::vector<SynapseHistory>, 2> history;
};

struct TrainedWeights {
  int n_bits = 0;
  std::vector<std::uint32_t> pop0_units;
  std::vector<std::uint32_t> pop1_units;
  std::vector<CodeWord> trained_codewords;  // ascending

  std::uint32_t units(int population, int bit) const {
    return population == 0 ? pop0_units[bit] : pop1_units[bit];
  }
  FixedWeight weight(int population, int bit) const {
    return FixedWeight::from_lsb(units(population, bit) * kUnitWeightLsb);
  }
  /// Throws ValidationError if the unit counts do not match trained_codewords.
  void validate() const;

  bool operator==(const TrainedWeights&) const = default;
};

/// Builds the training network (fresh, zero plastic weights) and presents `word`.
TrainingRun run_training(const CodeWord& word, const TrainingSchedule& schedule = TrainingSchedule::standard());

/// Runs one presentation and canonicalizes it to unit counts. Throws
/// TrainingFault unless the output fired once at teacher_time + 2, every
/// presented synapse got a nonzero update of the schedule's sign ("1": LTP
/// dominated, "0": LTD dominated) and every other plastic synapse got none.
TrainedWeights train_single(const CodeWord& word);

/// Element-wise sum of train_single over the words. Throws ValidationError for
/// an empty list, duplicates, or mixed widths.
TrainedWeights train_set(std::span<const CodeWord> words);

}  // namespace snnpat
