#include "snnpat/trainer.h"

#include <algorithm>

#include "snnpat/errors.h"

namespace snnpat {

void TrainedWeights::validate() const {
  const auto n = static_cast<std::size_t>(n_bits);
  if (n_bits < 1 || n_bits > kMaxCodeWordBits || pop0_units.size() != n || pop1_units.size() != n) {
    throw ValidationError("trained weights: unit vectors do not match n_bits");
  }
  if (trained_codewords.empty()) throw ValidationError("trained weights: no trained code words");
  for (std::size_t k = 0; k < trained_codewords.size(); ++k) {
    if (trained_codewords[k].n_bits() != n_bits) {
      throw ValidationError("trained weights: code word width differs from n_bits");
    }
    if (k > 0 && !(trained_codewords[k - 1] < trained_codewords[k])) {
      throw ValidationError("trained weights: code words must be unique and ascending");
    }
  }
  for (int i = 0; i < n_bits; ++i) {
    std::uint32_t ones = 0;
    for (const auto& w : trained_codewords) ones += w.bit(i) ? 1 : 0;
    const auto zeros = static_cast<std::uint32_t>(trained_codewords.size()) - ones;
    if (pop1_units[i] != ones || pop0_units[i] != zeros) {
      throw ValidationError("trained weights: unit counts at bit " + std::to_string(i) +
                            " disagree with the trained code words");
    }
  }
}

TrainingRun run_training(const CodeWord& word, const TrainingSchedule& schedule) {
  const auto n = static_cast<std::size_t>(word.n_bits());
  const FixedWeight drive = quantize_weight(schedule.drive_weight);

  NetworkSpec net;
  std::array<std::vector<std::vector<int>>, 2> times;
  times[0].resize(n);
  times[1].resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int b = word.bit(static_cast<int>(i)) ? 1 : 0;
    times[b][i] = b == 1 ? schedule.one_times : schedule.zero_times;
  }
  const PopulationId src0 = net.add_spike_source("source0", std::move(times[0]));
  const PopulationId src1 = net.add_spike_source("source1", std::move(times[1]));
  const PopulationId inj0 = net.add_lif_population("injector0", n);
  const PopulationId inj1 = net.add_lif_population("injector1", n);
  const PopulationId output = net.add_lif_population("output", 1);
  const PopulationId teacher_src = net.add_spike_source("teacher_source", {{schedule.teacher_time}});
  const PopulationId teacher = net.add_lif_population("teacher", 1);

  net.add_projection(make_projection(src0, inj0, one_to_one(n, drive)));
  net.add_projection(make_projection(src1, inj1, one_to_one(n, drive)));
  net.add_projection(make_projection(teacher_src, teacher, one_to_one(1, drive)));
  net.add_projection(make_projection(teacher, output, one_to_one(1, drive)));
  if (schedule.save_time) {
    const PopulationId save = net.add_spike_source("save", {{*schedule.save_time}});
    net.add_projection(make_projection(save, inj0, all_to_all(1, n, drive)));
    net.add_projection(make_projection(save, inj1, all_to_all(1, n, drive)));
  }

  std::array<std::size_t, 2> plastic{};
  for (int b = 0; b < 2; ++b) {
    ProjectionSpec proj = make_projection(b == 0 ? inj0 : inj1, output, all_to_all(n, 1, FixedWeight{}));
    proj.plasticity = schedule.stdp;
    plastic[b] = net.add_projection(std::move(proj));
  }

  const Recording rec = run_network(net, schedule.duration);

  TrainingRun run;
  run.output_spikes = rec.spike_times({output, 0});
  for (int b = 0; b < 2; ++b) {
    for (const auto& syn : rec.plastic.at(plastic[b])) {
      run.raw_delta[b].push_back(syn.raw_delta);
      run.stored[b].push_back(syn.connection.weight);
      run.history[b].push_back(syn.history);
    }
  }
  return run;
}

TrainedWeights train_single(const CodeWord& word) {
  const TrainingSchedule schedule = TrainingSchedule::standard();
  const TrainingRun run = run_training(word, schedule);
  const std::string who = "training " + to_string(word) + ": ";

  const int expected_spike = schedule.teacher_time + 2;
  if (run.output_spikes != std::vector<int>{expected_spike}) {
    throw TrainingFault(who + "output neuron did not fire exactly once at " +
                        std::to_string(expected_spike) + " ms");
  }

  TrainedWeights out;
  out.n_bits = word.n_bits();
  out.pop0_units.assign(word.n_bits(), 0);
  out.pop1_units.assign(word.n_bits(), 0);
  out.trained_codewords = {word};
  for (int i = 0; i < word.n_bits(); ++i) {
    const int b = word.bit(i) ? 1 : 0;
    const double presented = run.raw_delta[b][i];
    const double other = run.raw_delta[1 - b][i];
    const bool sign_ok = b == 1 ? presented > 0.0 : presented < 0.0;
    if (!sign_ok || other != 0.0) {
      throw TrainingFault(who + "unexpected plastic update at bit " + std::to_string(i) +
                          " (presented " + std::to_string(presented) + ", other " +
                          std::to_string(other) + ")");
    }
    (b == 1 ? out.pop1_units : out.pop0_units)[i] = 1;
  }
  return out;
}

TrainedWeights train_set(std::span<const CodeWord> words) {
  if (words.empty()) throw ValidationError("train_set: no code words given");
  std::vector<CodeWord> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].n_bits() != sorted[0].n_bits()) {
      throw ValidationError("train_set: code words have mixed widths");
    }
    if (k > 0 && sorted[k] == sorted[k - 1]) {
      throw ValidationError("train_set: duplicate code word " + to_string(sorted[k]));
    }
  }

  TrainedWeights total;
  total.n_bits = sorted[0].n_bits();
  total.pop0_units.assign(total.n_bits, 0);
  total.pop1_units.assign(total.n_bits, 0);
  for (const auto& w : sorted) {
    const TrainedWeights one = train_single(w);
    for (int i = 0; i < total.n_bits; ++i) {
      total.pop0_units[i] += one.pop0_units[i];
      total.pop1_units[i] += one.pop1_units[i];
    }
  }
  total.trained_codewords = std::move(sorted);
  return total;
}

}  // namespace snnpat
