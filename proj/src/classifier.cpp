#include "snnpat/classifier.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "snnpat/errors.h"
#include "snnpat/simulation.h"

namespace snnpat {

namespace {

// Smallest shift s >= 0 with x <= 2^s.
int ceil_log2_shift(double x) {
  if (x <= 1.0) return 0;
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  return m == 0.5 ? e - 1 : e;
}

}  // namespace

TestingNetwork build_testing_network(const TrainedWeights& weights, double h,
                                     ArithmeticProfile profile) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ContractViolation("build_testing_network: factor must be positive and finite");
  }
  const auto n = static_cast<std::size_t>(weights.n_bits);

  NeuronParams params;
  int shift = 0;
  if (profile == ArithmeticProfile::kHardwareLike) {
    params.decay_fraction_bits = 15;
    std::uint32_t max_units = 0;
    for (std::size_t i = 0; i < n; ++i) {
      max_units = std::max({max_units, weights.pop0_units[i], weights.pop1_units[i]});
    }
    shift = ceil_log2_shift(h * max_units * kUnitWeight);
  }

  TestingNetwork net;
  net.coarsen_shift = shift;
  net.injector0 = net.spec.add_spike_source("injector0", std::vector<std::vector<int>>(n));
  net.injector1 = net.spec.add_spike_source("injector1", std::vector<std::vector<int>>(n));
  net.output = net.spec.add_lif_population("output", 1, params);

  for (int b = 0; b < 2; ++b) {
    const PopulationId source = b == 0 ? net.injector0 : net.injector1;
    ProjectionSpec exc = make_projection(source, net.output, {});
    ProjectionSpec inh = make_projection(source, net.output, {}, SynapseSign::kInhibitory);
    for (std::size_t i = 0; i < n; ++i) {
      const int bit = static_cast<int>(i);
      const double agree = h * weights.units(b, bit) * kUnitWeight;
      const double disagree = h * weights.units(1 - b, bit) * kUnitWeight;
      exc.connections.push_back({i, 0, quantize_weight(agree, shift)});
      inh.connections.push_back({i, 0, quantize_weight(disagree, shift)});
    }
    net.spec.add_projection(std::move(exc));
    net.spec.add_projection(std::move(inh));
  }
  return net;
}

std::size_t output_spike_count(const TestingNetwork& net, const CodeWord& word) {
  NetworkSpec spec = net.spec;
  auto& inj0 = std::get<SpikeSourceSpec>(spec.populations[net.injector0].kind).spike_times;
  auto& inj1 = std::get<SpikeSourceSpec>(spec.populations[net.injector1].kind).spike_times;
  if (static_cast<std::size_t>(word.n_bits()) != inj0.size()) {
    throw ValidationError("classify: code word width differs from the network");
  }
  for (int i = 0; i < word.n_bits(); ++i) {
    (word.bit(i) ? inj1 : inj0)[i] = {0};
  }
  return run_network(spec, kTestWindowMs).spike_count(net.output);
}

bool classify(const TrainedWeights& weights, double h, const CodeWord& word,
              ArithmeticProfile profile) {
  return output_spike_count(build_testing_network(weights, h, profile), word) > 0;
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  tn += o.tn;
  fp += o.fp;
  fn += o.fn;
  return *this;
}

std::vector<std::uint64_t> firing_set(const TrainedWeights& weights, double h,
                                      ArithmeticProfile profile, unsigned threads) {
  if (weights.n_bits > kMaxExhaustiveBits) {
    throw ValidationError("exhaustive evaluation is limited to " +
                          std::to_string(kMaxExhaustiveBits) + " bits, got " +
                          std::to_string(weights.n_bits));
  }
  const TestingNetwork net = build_testing_network(weights, h, profile);
  const std::uint64_t total = std::uint64_t{1} << weights.n_bits;
  std::vector<char> fired(total, 0);

  unsigned workers = threads != 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total / 256 + 1));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t v = begin; v < end; ++v) {
      fired[v] = output_spike_count(net, CodeWord(v, weights.n_bits)) > 0 ? 1 : 0;
    }
  };
  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < total; begin += chunk) {
      pool.emplace_back(work, begin, std::min(total, begin + chunk));
    }
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < total; ++v) {
    if (fired[v]) out.push_back(v);
  }
  return out;
}

ConfusionCounts evaluate_exhaustive(const TrainedWeights& weights, double h,
                                    ArithmeticProfile profile, unsigned threads) {
  const std::vector<std::uint64_t> fired = firing_set(weights, h, profile, threads);
  ConfusionCounts c;
  for (std::uint64_t v : fired) {
    const bool trained = std::binary_search(weights.trained_codewords.begin(),
                                            weights.trained_codewords.end(),
                                            CodeWord(v, weights.n_bits));
    ++(trained ? c.tp : c.fp);
  }
  const std::uint64_t total = std::uint64_t{1} << weights.n_bits;
  c.fn = weights.trained_codewords.size() - c.tp;
  c.tn = total - c.tp - c.fp - c.fn;
  return c;
}

int net_units(const TrainedWeights& weights, const CodeWord& word) {
  if (word.n_bits() != weights.n_bits) throw ValidationError("net_units: width mismatch");
  int total = 0;
  for (int i = 0; i < word.n_bits(); ++i) {
    const int b = word.bit(i) ? 1 : 0;
    total += static_cast<int>(weights.units(b, i)) - static_cast<int>(weights.units(1 - b, i));
  }
  return total;
}

ClassificationReport compute_metrics(const ConfusionCounts& c) {
  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  return {ratio(c.tp + c.tn, c.total()), ratio(c.tp, c.tp + c.fp), ratio(c.tn, c.tn + c.fn),
          ratio(c.tp, c.tp + c.fn), ratio(c.tn, c.tn + c.fp)};
}

}  // namespace snnpat
