#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "snnpat/trainer.h"

namespace snnpat {

/// Persisted result of `snnpat train`.
struct WeightFile {
  TrainedWeights weights;
  std::optional<double> homeostatic_factor;  // null when not yet searched
  std::vector<CodeWord> dropped_codewords;
};

std::string weight_file_to_json(const WeightFile& file);

/// Throws ValidationError for malformed JSON, unknown schema values or
/// unit counts that contradict the trained code words.
WeightFile weight_file_from_json(const std::string& text);

void save_weight_file(const WeightFile& file, const std::filesystem::path& path);
WeightFile load_weight_file(const std::filesystem::path& path);

}  // namespace snnpat
