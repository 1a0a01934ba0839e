#include "snnpat/tables.h"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "snnpat/errors.h"

namespace snnpat {

namespace {

std::string factor_cell(const std::optional<GridFactor>& f, const std::string& error) {
  if (!error.empty()) return error;
  return f ? format_factor(*f) : "";
}

std::string join_words(const std::vector<CodeWord>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += to_string(w);
  }
  return out;
}

void counts_and_metrics(std::ostream& os, const ConfusionCounts& c, const ClassificationReport& m) {
  os << c.tp << ',' << c.tn << ',' << c.fp << ',' << c.fn << ',' << format_metric(m.accuracy) << ','
     << format_metric(m.precision) << ',' << format_metric(m.negative_prediction) << ','
     << format_metric(m.sensitivity) << ',' << format_metric(m.specificity);
}

constexpr const char* kEmptyCountsAndMetrics = ",,,,,,,,";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_metric(const std::optional<double>& m) {
  if (!m) return "undefined";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *m);
  return {buf, ptr};
}

std::string format_metric3(const std::optional<double>& m) {
  if (!m) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *m);
  return buf;
}

void write_dual_csv(std::ostream& os, std::span<const DualRow> rows) {
  os << kDualHeader << '\n';
  for (const auto& r : rows) {
    os << to_string(r.partner) << ',' << r.hd << ',' << factor_cell(r.factor, r.error) << ',';
    if (!r.error.empty()) {
      os << ",," << kEmptyCountsAndMetrics << '\n';
      continue;
    }
    os << r.counts.positives() << ',' << r.counts.negatives() << ',';
    counts_and_metrics(os, r.counts, r.metrics);
    os << '\n';
  }
}

void write_triple_units_csv(std::ostream& os, std::span<const TripleRow> rows) {
  os << kTripleUnitsHeader << '\n';
  for (const auto& r : rows) {
    os << to_string(r.words[0]) << ',' << to_string(r.words[1]) << ',' << to_string(r.words[2])
       << ',' << r.hd[0] << ',' << r.hd[1] << ',' << r.hd[2] << ',' << r.units[0] << ','
       << r.units[1] << ',' << r.units[2] << ',' << factor_cell(r.factor, r.error) << '\n';
  }
}

void write_triple_metrics_csv(std::ostream& os, std::span<const TripleRow> rows) {
  os << kTripleMetricsHeader << '\n';
  for (const auto& r : rows) {
    os << to_string(r.words[0]) << ',' << to_string(r.words[1]) << ',' << to_string(r.words[2])
       << ',';
    if (!r.error.empty()) {
      os << kEmptyCountsAndMetrics << '\n';
      continue;
    }
    counts_and_metrics(os, r.counts, r.metrics);
    os << '\n';
  }
}

void write_triple_combined_csv(std::ostream& os, std::span<const TripleRow> rows) {
  os << kTripleUnitsHeader << ",dropped,tp,tn,fp,fn,accuracy,precision,negative_prediction,"
        "sensitivity,specificity\n";
  for (const auto& r : rows) {
    os << to_string(r.words[0]) << ',' << to_string(r.words[1]) << ',' << to_string(r.words[2])
       << ',' << r.hd[0] << ',' << r.hd[1] << ',' << r.hd[2] << ',' << r.units[0] << ','
       << r.units[1] << ',' << r.units[2] << ',' << factor_cell(r.factor, r.error) << ','
       << join_words(r.dropped) << ',';
    if (!r.error.empty()) {
      os << kEmptyCountsAndMetrics << '\n';
      continue;
    }
    counts_and_metrics(os, r.counts, r.metrics);
    os << '\n';
  }
}

void print_dual_table(std::ostream& os, std::span<const DualRow> rows) {
  os << std::left << std::setw(9) << "pattern2" << std::setw(4) << "hd" << std::setw(17) << "factor"
     << std::setw(6) << "tp" << std::setw(6) << "tn" << std::setw(6) << "fp" << std::setw(6) << "fn"
     << "acc    prec   npv    sens   spec\n";
  for (const auto& r : rows) {
    os << std::setw(9) << to_string(r.partner) << std::setw(4) << r.hd << std::setw(17)
       << factor_cell(r.factor, r.error);
    if (r.error.empty()) {
      os << std::setw(6) << r.counts.tp << std::setw(6) << r.counts.tn << std::setw(6) << r.counts.fp
         << std::setw(6) << r.counts.fn;
      for (const auto& m : {r.metrics.accuracy, r.metrics.precision, r.metrics.negative_prediction,
                            r.metrics.sensitivity, r.metrics.specificity}) {
        os << std::setw(7) << format_metric3(m);
      }
    }
    os << '\n';
  }
}

void print_triple_table(std::ostream& os, std::span<const TripleRow> rows) {
  os << std::left << std::setw(16) << "code words" << std::setw(10) << "hd" << std::setw(12) << "units"
     << std::setw(12) << "factor" << std::setw(6) << "tp" << std::setw(6) << "tn" << std::setw(6) << "fp"
     << std::setw(6) << "fn" << "acc    prec   npv    sens   spec\n";
  for (const auto& r : rows) {
    std::ostringstream words, hd, units;
    words << to_string(r.words[0]) << ' ' << to_string(r.words[1]) << ' ' << to_string(r.words[2]);
    hd << r.hd[0] << ' ' << r.hd[1] << ' ' << r.hd[2];
    units << r.units[0] << ' ' << r.units[1] << ' ' << r.units[2];
    os << std::setw(16) << words.str() << std::setw(10) << hd.str() << std::setw(12) << units.str()
       << std::setw(12) << factor_cell(r.factor, r.error);
    if (r.error.empty()) {
      os << std::setw(6) << r.counts.tp << std::setw(6) << r.counts.tn << std::setw(6) << r.counts.fp
         << std::setw(6) << r.counts.fn;
      for (const auto& m : {r.metrics.accuracy, r.metrics.precision, r.metrics.negative_prediction,
                            r.metrics.sensitivity, r.metrics.specificity}) {
        os << std::setw(7) << format_metric3(m);
      }
    }
    os << '\n';
  }
}

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw ValidationError("csv line " + std::to_string(line_no) + ": expected " +
                            std::to_string(t.header.size()) + " cells, got " +
                            std::to_string(cells.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::map<std::string, CsvTable> plot_grids(std::span<const CsvTable> tables) {
  static const std::vector<std::string> kQuantities = {
      "accuracy", "precision", "negative_prediction", "sensitivity", "specificity", "factor"};
  static const std::vector<std::string> kAxes = {"hd12", "hd13", "hd23"};

  std::vector<std::string> order;
  std::map<std::string, std::map<std::string, std::string>> merged;
  std::map<std::string, bool> available;
  bool any_header = false;
  for (const auto& t : tables) {
    if (t.header.empty()) continue;
    any_header = true;
    const auto c1 = t.column("cw1");
    const auto c2 = t.column("cw2");
    const auto c3 = t.column("cw3");
    if (!c1 || !c2 || !c3) throw ValidationError("plot data: table lacks cw1/cw2/cw3 columns");
    for (const auto& name : t.header) available[name] = true;
    for (const auto& row : t.rows) {
      const std::string key = row[*c1] + ' ' + row[*c2] + ' ' + row[*c3];
      if (!merged.count(key)) order.push_back(key);
      for (std::size_t i = 0; i < t.header.size(); ++i) merged[key][t.header[i]] = row[i];
    }
  }

  std::map<std::string, CsvTable> grids;
  for (const auto& q : kQuantities) grids[q].header = {"hd12", "hd13", "hd23", "value"};
  if (!any_header) return grids;

  std::string missing;
  for (const auto& name : kAxes) {
    if (!available.count(name)) missing += " " + name;
  }
  for (const auto& name : kQuantities) {
    if (!available.count(name)) missing += " " + name;
  }
  if (!missing.empty()) throw ValidationError("plot data: missing columns:" + missing);

  for (const auto& key : order) {
    auto& cells = merged[key];
    for (const auto& q : kQuantities) {
      grids[q].rows.push_back({cells["hd12"], cells["hd13"], cells["hd23"], cells[q]});
    }
  }
  return grids;
}

}  // namespace snnpat
