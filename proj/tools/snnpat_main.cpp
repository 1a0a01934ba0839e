// snnpat: train, evaluate and sweep the spatial-pattern SNN classifier.
//
// Exit codes: 0 ok, 1 input error, 2 infinite homeostasis, 3 oracle divergence.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snnpat/classifier.h"
#include "snnpat/errors.h"
#include "snnpat/experiments.h"
#include "snnpat/homeostasis.h"
#include "snnpat/oracle.h"
#include "snnpat/tables.h"
#include "snnpat/trainer.h"
#include "snnpat/weight_file.h"

namespace {

using namespace snnpat;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfinite = 2;
constexpr int kExitDivergence = 3;

struct Globals {
  int bits = 10;
  std::string profile = "reference";
};

Json metric_json(const std::optional<double>& m) { return m ? Json(*m) : Json(nullptr); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

template <typename Writer>
void write_to(const std::string& path, Writer&& writer) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot write " + path);
  writer(os);
}

void report_check(const OracleCheck& check) {
  if (check.ok()) {
    std::cerr << "check: simulator and oracle agree\n";
    return;
  }
  std::cerr << "check: DIVERGENCE\n";
  if (!check.classification_mismatches.empty()) {
    std::cerr << "  " << check.classification_mismatches.size() << " words classified differently, first "
              << check.classification_mismatches.front() << "\n";
  }
  if (check.simulator_ticks != check.oracle_ticks || !check.search_error.empty()) {
    auto show = [](const std::optional<std::int64_t>& t) {
      return t ? format_factor(GridFactor{*t}) : std::string("infinite");
    };
    std::cerr << "  factor: simulator " << show(check.simulator_ticks) << ", oracle "
              << show(check.oracle_ticks) << (check.search_error.empty() ? "" : " (" + check.search_error + ")")
              << "\n";
  }
}

int cmd_train(const Globals& g, const std::string& patterns, const std::string& out) {
  const auto words = parse_codeword_list(patterns, g.bits);
  const ArithmeticProfile profile = parse_profile(g.profile);
  WeightFile file;
  file.weights = train_set(words);
  try {
    const HomeostasisResult h = network_factor(file.weights, profile);
    file.homeostatic_factor = h.network_factor.value();
    file.dropped_codewords = h.dropped;
    std::cerr << "homeostatic factor " << format_factor(h.network_factor);
    if (!h.dropped.empty()) std::cerr << ", dropped " << h.dropped.size() << " code word(s)";
    std::cerr << "\n";
  } catch (const InfiniteHomeostasis&) {
    std::cerr << "error: infinite homeostatic factor: no trained pattern can make the output fire\n";
    return kExitInfinite;
  }
  save_weight_file(file, out);
  return kExitOk;
}

int cmd_evaluate(const Globals& g, const std::string& weights_path, std::optional<double> factor,
                 bool check, const std::string& format, const std::string& out) {
  const ArithmeticProfile profile = parse_profile(g.profile);
  const WeightFile file = load_weight_file(weights_path);
  const std::optional<double> h = factor ? factor : file.homeostatic_factor;
  if (!h) throw ValidationError("weight file has no homeostatic factor; pass --factor");
  if (!(*h > 0.0) || !std::isfinite(*h)) throw ValidationError("--factor must be positive");

  const ConfusionCounts c = evaluate_exhaustive(file.weights, *h, profile);
  const ClassificationReport m = compute_metrics(c);

  std::ostringstream os;
  if (format == "json") {
    Json j;
    j["n_bits"] = file.weights.n_bits;
    Json trained = Json::array();
    for (const auto& w : file.weights.trained_codewords) trained.push_back(w.value());
    j["trained_codewords"] = trained;
    j["profile"] = to_string(profile);
    j["factor"] = *h;
    j["positives"] = c.positives();
    j["negatives"] = c.negatives();
    j["tp"] = c.tp;
    j["tn"] = c.tn;
    j["fp"] = c.fp;
    j["fn"] = c.fn;
    j["accuracy"] = metric_json(m.accuracy);
    j["precision"] = metric_json(m.precision);
    j["negative_prediction"] = metric_json(m.negative_prediction);
    j["sensitivity"] = metric_json(m.sensitivity);
    j["specificity"] = metric_json(m.specificity);
    os << j.dump(2) << "\n";
  } else {
    os << "factor,positives,negatives,tp,tn,fp,fn,accuracy,precision,negative_prediction,sensitivity,"
          "specificity\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", *h);
    os << buf << ',' << c.positives() << ',' << c.negatives() << ',' << c.tp << ',' << c.tn << ','
       << c.fp << ',' << c.fn << ',' << format_metric(m.accuracy) << ',' << format_metric(m.precision)
       << ',' << format_metric(m.negative_prediction) << ',' << format_metric(m.sensitivity) << ','
       << format_metric(m.specificity) << "\n";
  }
  if (out.empty()) {
    std::cout << os.str();
  } else {
    write_to(out, [&](std::ostream& f) { f << os.str(); });
  }

  if (check) {
    const OracleCheck result = check_against_oracle(file.weights, *h, profile);
    report_check(result);
    if (!result.ok()) return kExitDivergence;
  }
  return kExitOk;
}

int cmd_sweep_dual(const Globals& g, std::uint64_t base_value, const std::string& partners,
                   bool paper_set, bool check, const std::string& out) {
  const ArithmeticProfile profile = parse_profile(g.profile);
  const CodeWord base(base_value, g.bits);
  std::vector<CodeWord> list;
  if (paper_set) {
    if (g.bits != 10) throw ValidationError("--paper-set is defined for 10-bit code words");
    list = reference_dual_partners();
  } else {
    list = parse_codeword_list(partners, g.bits);
  }
  const std::vector<DualRow> rows = sweep_dual(base, list, profile);
  if (!out.empty()) write_to(out, [&](std::ostream& f) { write_dual_csv(f, rows); });
  print_dual_table(std::cout, rows);

  int rc = kExitOk;
  if (check) {
    for (const auto& r : rows) {
      if (!r.factor) continue;
      const std::array<CodeWord, 2> pair{base, r.partner};
      const OracleCheck result = check_against_oracle(train_set(pair), r.factor->value(), profile);
      if (!result.ok()) {
        std::cerr << "partner " << to_string(r.partner) << ": ";
        report_check(result);
        rc = kExitDivergence;
      }
    }
    if (rc == kExitOk) std::cerr << "check: all rows agree with the oracle\n";
  }
  return rc;
}

int cmd_sweep_triple(const Globals& g, const std::string& triples_path, bool enumerate,
                     const std::string& compare, bool check, const std::string& units_out,
                     const std::string& metrics_out, const std::string& combined_out) {
  const ArithmeticProfile profile = parse_profile(g.profile);
  std::vector<Triple> triples;
  if (enumerate) {
    triples = enumerate_triples(g.bits);
    std::cerr << "enumerated " << triples.size() << " triples\n";
  } else {
    std::ifstream is(triples_path);
    if (!is) throw ValidationError("cannot read " + triples_path);
    triples = read_triples(is, g.bits);
  }

  if (!compare.empty()) {
    std::ifstream is(compare);
    if (!is) throw ValidationError("cannot read " + compare);
    const std::vector<Triple> reference = read_triples(is, g.bits);
    std::size_t differing = 0;
    const std::size_t common = std::min(reference.size(), triples.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (reference[i] != triples[i]) {
        if (differing++ < 5) {
          std::cerr << "compare: row " << i + 1 << " differs: " << to_string(triples[i][0]) << ' '
                    << to_string(triples[i][1]) << ' ' << to_string(triples[i][2]) << " vs "
                    << to_string(reference[i][0]) << ' ' << to_string(reference[i][1]) << ' '
                    << to_string(reference[i][2]) << "\n";
        }
      }
    }
    if (differing == 0 && reference.size() == triples.size()) {
      std::cerr << "compare: identical to " << compare << " (" << triples.size() << " rows)\n";
    } else {
      std::cerr << "compare: " << differing << " differing rows, sizes " << triples.size() << " vs "
                << reference.size() << "\n";
    }
  }

  const std::vector<TripleRow> rows = sweep_triples(triples, profile);
  if (!units_out.empty()) write_to(units_out, [&](std::ostream& f) { write_triple_units_csv(f, rows); });
  if (!metrics_out.empty()) {
    write_to(metrics_out, [&](std::ostream& f) { write_triple_metrics_csv(f, rows); });
  }
  if (!combined_out.empty()) {
    write_to(combined_out, [&](std::ostream& f) { write_triple_combined_csv(f, rows); });
  }
  print_triple_table(std::cout, rows);

  int rc = kExitOk;
  if (check) {
    for (const auto& r : rows) {
      if (!r.factor) continue;
      const OracleCheck result = check_against_oracle(train_set(r.words), r.factor->value(), profile);
      if (!result.ok()) {
        std::cerr << "triple " << to_string(r.words[0]) << ' ' << to_string(r.words[1]) << ' '
                  << to_string(r.words[2]) << ": ";
        report_check(result);
        rc = kExitDivergence;
      }
    }
    if (rc == kExitOk) std::cerr << "check: all rows agree with the oracle\n";
  }
  return rc;
}

int cmd_plotdata(const std::vector<std::string>& from, const std::string& out_dir) {
  std::vector<CsvTable> tables;
  for (const auto& path : from) tables.push_back(parse_csv(read_file(path)));
  const auto grids = plot_grids(tables);
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, table] : grids) {
    write_to((std::filesystem::path(out_dir) / (name + ".csv")).string(), [&](std::ostream& f) {
      for (std::size_t i = 0; i < table.header.size(); ++i) f << (i ? "," : "") << table.header[i];
      f << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
        f << "\n";
      }
    });
  }
  std::cerr << "wrote " << grids.size() << " grids to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spiking-network spatial pattern training, homeostasis and classification"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--bits", g.bits, "Code word width")->check(CLI::Range(1, kMaxCodeWordBits));
  app.add_option("--profile", g.profile, "Arithmetic profile")
      ->check(CLI::IsMember({"reference", "hardware"}));

  std::string patterns, out;
  auto* train = app.add_subcommand("train", "Train a weight file from code words");
  train->add_option("--patterns", patterns, "Comma-separated code words")->required();
  train->add_option("--out", out, "Weight file to write")->required();

  std::string weights_path, format = "csv", eval_out;
  std::optional<double> factor;
  bool check = false;
  auto* evaluate = app.add_subcommand("evaluate", "Exhaustively evaluate a weight file");
  evaluate->add_option("--weights", weights_path, "Weight file")->required();
  evaluate->add_option("--factor", factor, "Override the stored homeostatic factor");
  evaluate->add_flag("--check", check, "Cross-validate against the oracle");
  evaluate->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  evaluate->add_option("--out", eval_out, "Report file (default stdout)");

  std::uint64_t base = 992;
  std::string partners, dual_out;
  bool paper_set = false;
  auto* dual = app.add_subcommand("sweep-dual", "Two-pattern sweep against a base word");
  dual->add_option("--base", base, "Base code word");
  auto* partners_opt = dual->add_option("--partners", partners, "Comma-separated partner words");
  auto* paper_opt = dual->add_flag("--paper-set", paper_set, "Use the 14 reference partners");
  partners_opt->excludes(paper_opt);
  dual->add_option("--out", dual_out, "CSV table to write");
  dual->add_flag("--check", check, "Cross-validate every row against the oracle");

  std::string triples_path, compare, units_out, metrics_out, combined_out;
  bool enumerate = false;
  auto* triple = app.add_subcommand("sweep-triple", "Three-pattern sweep");
  auto* triples_opt = triple->add_option("--triples", triples_path, "CSV of code word triples");
  auto* enum_opt = triple->add_flag("--enumerate", enumerate, "Generate triples by HD signature");
  triples_opt->excludes(enum_opt);
  triple->add_option("--compare", compare, "Report differences against this triples file");
  triple->add_option("--units-out", units_out, "Unit weights + factor table");
  triple->add_option("--metrics-out", metrics_out, "Confusion + metrics table");
  triple->add_option("--combined-out", combined_out, "Both tables in one (plot data input)");
  triple->add_flag("--check", check, "Cross-validate every row against the oracle");

  std::vector<std::string> from;
  std::string out_dir = "plotdata";
  auto* plot = app.add_subcommand("plotdata", "Per-metric grids indexed by (hd12, hd13, hd23)");
  plot->add_option("--from", from, "Triple sweep table(s)")->required();
  plot->add_option("--out-dir", out_dir, "Directory for the grid CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*train) return cmd_train(g, patterns, out);
    if (*evaluate) return cmd_evaluate(g, weights_path, factor, check, format, eval_out);
    if (*dual) {
      if (partners.empty() && !paper_set) throw ValidationError("give --partners or --paper-set");
      return cmd_sweep_dual(g, base, partners, paper_set, check, dual_out);
    }
    if (*triple) {
      if (triples_path.empty() && !enumerate) throw ValidationError("give --triples or --enumerate");
      return cmd_sweep_triple(g, triples_path, enumerate, compare, check, units_out, metrics_out,
                              combined_out);
    }
    if (*plot) return cmd_plotdata(from, out_dir);
  } catch (const InfiniteHomeostasis& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfinite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
