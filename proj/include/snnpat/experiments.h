#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snnpat/arithmetic_profile.h"
#include "snnpat/classifier.h"
#include "snnpat/homeostasis.h"
#include "snnpat/trainer.h"

namespace snnpat {

/// The 14 reference partners of 992, in column order.
std::vector<CodeWord> reference_dual_partners();

/// Train, search, evaluate. `error` is set (and the rest left empty) when
/// homeostasis is infinite.
struct ExperimentResult {
  TrainedWeights weights;
  std::optional<HomeostasisResult> homeostasis;
  ConfusionCounts counts;
  ClassificationReport metrics;
  std::string error;
};

ExperimentResult run_experiment(std::span<const CodeWord> words,
                                ArithmeticProfile profile = ArithmeticProfile::kReference,
                                unsigned threads = 0);

struct DualRow {
  CodeWord partner;
  int hd = 0;
  std::optional<GridFactor> factor;
  ConfusionCounts counts;
  ClassificationReport metrics;
  std::string error;  // "partner equals base", "infinite factor"
};

/// One row per partner, in input order. Rows run concurrently.
std::vector<DualRow> sweep_dual(const CodeWord& base, std::span<const CodeWord> partners,
                                ArithmeticProfile profile = ArithmeticProfile::kReference);

using Triple = std::array<CodeWord, 3>;

struct TripleRow {
  Triple words;
  std::array<int, 3> hd{};     // hd12, hd13, hd23
  std::array<int, 3> units{};  // net unit drive of each trained word
  std::optional<GridFactor> factor;
  std::vector<CodeWord> dropped;
  ConfusionCounts counts;
  ClassificationReport metrics;
  std::string error;
};

/// CSV rows of three code words; '#' comments, blank lines and a leading
/// "cw1,cw2,cw3" header are skipped. Throws ValidationError listing every bad
/// row number (1-based line numbers).
std::vector<Triple> read_triples(std::istream& in, int n_bits);

/// Lexicographic scan over cw1 < cw2 < cw3 keeping the first triple of every
/// unseen (hd12, hd13, hd23) with hd12 <= hd13 <= hd23. Limited to 11 bits.
std::vector<Triple> enumerate_triples(int n_bits);

std::vector<TripleRow> sweep_triples(std::span<const Triple> triples,
                                     ArithmeticProfile profile = ArithmeticProfile::kReference);

/// Simulator vs oracle at factor h over every word, plus both factor searches.
struct OracleCheck {
  std::vector<std::uint64_t> classification_mismatches;
  std::optional<std::int64_t> simulator_ticks;
  std::optional<std::int64_t> oracle_ticks;
  std::string search_error;  // set when the two searches disagree on reachability/errors

  bool ok() const {
    return classification_mismatches.empty() && simulator_ticks == oracle_ticks &&
           search_error.empty();
  }
};

OracleCheck check_against_oracle(const TrainedWeights& weights, double h,
                                 ArithmeticProfile profile = ArithmeticProfile::kReference);

}  // namespace snnpat
