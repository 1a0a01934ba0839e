#include "snnpat/experiments.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "snnpat/errors.h"
#include "snnpat/oracle.h"

namespace snnpat {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex failure_mu;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string trim(std::string s) {
  const auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && issp(s[b])) ++b;
  return s.substr(b);
}

}  // namespace

std::vector<CodeWord> reference_dual_partners() {
  std::vector<CodeWord> out;
  for (std::uint64_t v : {1008, 1016, 1020, 1022, 1023, 960, 896, 768, 512, 0, 16, 24, 28, 30}) {
    out.emplace_back(v, 10);
  }
  return out;
}

ExperimentResult run_experiment(std::span<const CodeWord> words, ArithmeticProfile profile,
                                unsigned threads) {
  ExperimentResult r;
  r.weights = train_set(words);
  try {
    r.homeostasis = network_factor(r.weights, profile);
  } catch (const InfiniteHomeostasis& e) {
    r.error = "infinite factor";
    return r;
  }
  r.counts = evaluate_exhaustive(r.weights, r.homeostasis->network_factor.value(), profile, threads);
  r.metrics = compute_metrics(r.counts);
  return r;
}

std::vector<DualRow> sweep_dual(const CodeWord& base, std::span<const CodeWord> partners,
                                ArithmeticProfile profile) {
  std::vector<DualRow> rows;
  for (const auto& p : partners) rows.push_back({p, hamming(base, p), {}, {}, {}, {}});
  parallel_for(rows.size(), [&](std::size_t i) {
    DualRow& row = rows[i];
    if (row.partner == base) {
      row.error = "partner equals base";
      return;
    }
    const std::array<CodeWord, 2> pair{base, row.partner};
    const ExperimentResult r = run_experiment(pair, profile, 1);
    if (!r.error.empty()) {
      row.error = r.error;
      return;
    }
    row.factor = r.homeostasis->network_factor;
    row.counts = r.counts;
    row.metrics = r.metrics;
  });
  return rows;
}

std::vector<Triple> read_triples(std::istream& in, int n_bits) {
  std::vector<Triple> out;
  std::vector<std::string> problems;
  std::string line;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (first_content && line.rfind("cw1", 0) == 0) {
      first_content = false;
      continue;
    }
    first_content = false;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    try {
      if (fields.size() != 3) throw ValidationError("expected 3 fields, got " + std::to_string(fields.size()));
      Triple t{parse_codeword(fields[0], n_bits), parse_codeword(fields[1], n_bits),
               parse_codeword(fields[2], n_bits)};
      if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw ValidationError("repeated code word");
      out.push_back(t);
    } catch (const ValidationError& e) {
      problems.push_back("row " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "malformed triples file";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  return out;
}

std::vector<Triple> enumerate_triples(int n_bits) {
  if (n_bits < 2 || n_bits > 11) {
    throw ValidationError("--enumerate supports 2..11 bits, got " + std::to_string(n_bits));
  }
  const std::uint32_t total = 1U << n_bits;
  std::set<std::tuple<int, int, int>> seen;
  std::vector<Triple> out;
  for (std::uint32_t a = 0; a < total; ++a) {
    for (std::uint32_t b = a + 1; b < total; ++b) {
      const int hd12 = std::popcount(a ^ b);
      for (std::uint32_t c = b + 1; c < total; ++c) {
        const int hd13 = std::popcount(a ^ c);
        if (hd13 < hd12) continue;
        const int hd23 = std::popcount(b ^ c);
        if (hd23 < hd13) continue;
        if (seen.emplace(hd12, hd13, hd23).second) {
          out.push_back({CodeWord(a, n_bits), CodeWord(b, n_bits), CodeWord(c, n_bits)});
        }
      }
    }
  }
  return out;
}

std::vector<TripleRow> sweep_triples(std::span<const Triple> triples, ArithmeticProfile profile) {
  std::vector<TripleRow> rows;
  for (const auto& t : triples) rows.push_back({t, {}, {}, {}, {}, {}, {}, {}});
  parallel_for(rows.size(), [&](std::size_t i) {
    const Triple& t = triples[i];
    TripleRow& row = rows[i];
    row.hd = {hamming(t[0], t[1]), hamming(t[0], t[2]), hamming(t[1], t[2])};
    const ExperimentResult r = run_experiment(t, profile, 1);
    for (int k = 0; k < 3; ++k) row.units[k] = net_units(r.weights, t[k]);
    if (!r.error.empty()) {
      row.error = r.error;
      return;
    }
    row.factor = r.homeostasis->network_factor;
    row.dropped = r.homeostasis->dropped;
    row.counts = r.counts;
    row.metrics = r.metrics;
  });
  return rows;
}

OracleCheck check_against_oracle(const TrainedWeights& weights, double h,
                                 ArithmeticProfile profile) {
  OracleCheck out;
  const auto& trained = weights.trained_codewords;

  const std::vector<std::uint64_t> sim = firing_set(weights, h, profile);
  const std::vector<std::uint64_t> orc = oracle::oracle_firing_set(trained, h, profile);
  std::set_symmetric_difference(sim.begin(), sim.end(), orc.begin(), orc.end(),
                                std::back_inserter(out.classification_mismatches));

  std::optional<HomeostasisResult> sim_h;
  std::optional<oracle::OracleFactors> orc_h;
  try {
    sim_h = network_factor(weights, profile);
  } catch (const InfiniteHomeostasis&) {
  }
  try {
    orc_h = oracle::oracle_min_factor(trained, profile);
  } catch (const InfiniteHomeostasis&) {
  }
  if (sim_h) out.simulator_ticks = sim_h->network_factor.ticks;
  if (orc_h) out.oracle_ticks = orc_h->network_ticks;
  if (sim_h.has_value() != orc_h.has_value()) {
    out.search_error = "one search reports infinite homeostasis, the other does not";
  } else if (sim_h) {
    for (std::size_t k = 0; k < trained.size(); ++k) {
      const auto& s = sim_h->per_pattern[k].factor;
      const auto& o = orc_h->per_pattern_ticks[k];
      const std::optional<std::int64_t> st = s ? std::optional<std::int64_t>(s->ticks) : std::nullopt;
      if (st != o) {
        out.search_error = "per-pattern factor differs for code word " + to_string(trained[k]);
        break;
      }
    }
  }
  return out;
}

}  // namespace snnpat
