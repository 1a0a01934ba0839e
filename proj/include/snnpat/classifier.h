#pragma once

#include <cstdint>
#include <optional>

#include "snnpat/arithmetic_profile.h"
#include "snnpat/codeword.h"
#include "snnpat/network.h"
#include "snnpat/trainer.h"

namespace snnpat {

inline constexpr int kMaxExhaustiveBits = 24;
inline constexpr int kTestWindowMs = 20;

/// The testing network plus the handles needed to present a word.
struct TestingNetwork {
  NetworkSpec spec;
  PopulationId injector0 = 0;  // spike sources, one neuron per bit
  PopulationId injector1 = 0;
  PopulationId output = 0;
  int coarsen_shift = 0;  // grid used for the synapses, in powers of two of 2^-11
};

/// Per bit n, injector-b neuron n projects excitatory q(h*units_b[n]*unit) and
/// inhibitory q(h*units_(1-b)[n]*unit) onto the single output neuron.
/// Throws ContractViolation unless h > 0.
TestingNetwork build_testing_network(const TrainedWeights& weights, double h,
                                     ArithmeticProfile profile = ArithmeticProfile::kReference);

/// Spikes the output emits when `word` is presented at t = 0 to a fresh copy
/// of the network (window kTestWindowMs).
std::size_t output_spike_count(const TestingNetwork& net, const CodeWord& word);

/// True iff the output spikes at least once.
bool classify(const TrainedWeights& weights, double h, const CodeWord& word,
              ArithmeticProfile profile = ArithmeticProfile::kReference);

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t positives() const { return tp + fp; }
  std::uint64_t negatives() const { return tn + fn; }
  std::uint64_t total() const { return tp + tn + fp + fn; }

  ConfusionCounts& operator+=(const ConfusionCounts& o);
  bool operator==(const ConfusionCounts&) const = default;
};

/// A metric is nullopt when its denominator is zero.
struct ClassificationReport {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> negative_prediction;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
};

/// Classifies every word of width weights.n_bits. `threads` = 0 uses the
/// hardware concurrency. Throws ValidationError above kMaxExhaustiveBits.
ConfusionCounts evaluate_exhaustive(const TrainedWeights& weights, double h,
                                    ArithmeticProfile profile = ArithmeticProfile::kReference,
                                    unsigned threads = 0);

/// Word values the output fires on, ascending. Same bound as evaluate_exhaustive.
std::vector<std::uint64_t> firing_set(const TrainedWeights& weights, double h,
                                      ArithmeticProfile profile = ArithmeticProfile::kReference,
                                      unsigned threads = 0);

/// Signed unit drive a word receives from the trained weights:
/// sum over bits of units(bit value) - units(other value).
int net_units(const TrainedWeights& weights, const CodeWord& word);

ClassificationReport compute_metrics(const ConfusionCounts& counts);

}  // namespace snnpat
