#include "snnpat/weight_file.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snnpat/errors.h"

namespace snnpat {

using Json = nlohmann::ordered_json;

std::string weight_file_to_json(const WeightFile& file) {
  Json j;
  j["n_bits"] = file.weights.n_bits;
  j["lsb"] = kWeightLsb;
  j["unit_lsb"] = kUnitWeightLsb;
  j["pop0_units"] = file.weights.pop0_units;
  j["pop1_units"] = file.weights.pop1_units;
  Json trained = Json::array();
  for (const auto& w : file.weights.trained_codewords) trained.push_back(w.value());
  j["trained_codewords"] = trained;
  j["homeostatic_factor"] = file.homeostatic_factor ? Json(*file.homeostatic_factor) : Json(nullptr);
  Json dropped = Json::array();
  for (const auto& w : file.dropped_codewords) dropped.push_back(w.value());
  j["dropped_codewords"] = dropped;
  return j.dump(2) + "\n";
}

WeightFile weight_file_from_json(const std::string& text) {
  WeightFile out;
  try {
    const Json j = Json::parse(text);
    const int n_bits = j.at("n_bits").get<int>();
    if (j.at("lsb").get<double>() != kWeightLsb) throw ValidationError("weight file: unsupported lsb");
    if (j.at("unit_lsb").get<std::uint64_t>() != kUnitWeightLsb) {
      throw ValidationError("weight file: unsupported unit_lsb");
    }
    out.weights.n_bits = n_bits;
    out.weights.pop0_units = j.at("pop0_units").get<std::vector<std::uint32_t>>();
    out.weights.pop1_units = j.at("pop1_units").get<std::vector<std::uint32_t>>();
    for (auto v : j.at("trained_codewords").get<std::vector<std::uint64_t>>()) {
      out.weights.trained_codewords.emplace_back(v, n_bits);
    }
    const Json& h = j.at("homeostatic_factor");
    if (!h.is_null()) {
      const double value = h.get<double>();
      if (!(value > 0.0)) throw ValidationError("weight file: homeostatic_factor must be positive");
      out.homeostatic_factor = value;
    }
    for (auto v : j.at("dropped_codewords").get<std::vector<std::uint64_t>>()) {
      out.dropped_codewords.emplace_back(v, n_bits);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("weight file: ") + e.what());
  }
  out.weights.validate();
  for (const auto& d : out.dropped_codewords) {
    const auto& t = out.weights.trained_codewords;
    if (std::find(t.begin(), t.end(), d) == t.end()) {
      throw ValidationError("weight file: dropped code word " + to_string(d) + " was never trained");
    }
  }
  return out;
}

void save_weight_file(const WeightFile& file, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot write " + path.string());
  os << weight_file_to_json(file);
  if (!os) throw ValidationError("write failed: " + path.string());
}

WeightFile load_weight_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return weight_file_from_json(ss.str());
}

}  // namespace snnpat
