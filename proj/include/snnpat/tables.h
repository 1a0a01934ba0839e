#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "snnpat/classifier.h"
#include "snnpat/experiments.h"

namespace snnpat {

inline constexpr const char* kDualHeader =
    "pattern2,hd,factor,positives,negatives,tp,tn,fp,fn,accuracy,precision,"
    "negative_prediction,sensitivity,specificity";
inline constexpr const char* kTripleUnitsHeader = "cw1,cw2,cw3,hd12,hd13,hd23,units1,units2,units3,factor";
inline constexpr const char* kTripleMetricsHeader =
    "cw1,cw2,cw3,tp,tn,fp,fn,accuracy,precision,negative_prediction,sensitivity,specificity";

/// Shortest round-trip decimal, or "undefined".
std::string format_metric(const std::optional<double>& m);
/// Three decimals for display, or "undefined".
std::string format_metric3(const std::optional<double>& m);

void write_dual_csv(std::ostream& os, std::span<const DualRow> rows);
void write_triple_units_csv(std::ostream& os, std::span<const TripleRow> rows);
void write_triple_metrics_csv(std::ostream& os, std::span<const TripleRow> rows);
/// Units and metrics side by side, plus a space-separated "dropped" column.
void write_triple_combined_csv(std::ostream& os, std::span<const TripleRow> rows);

/// Human-readable three-decimal summaries.
void print_dual_table(std::ostream& os, std::span<const DualRow> rows);
void print_triple_table(std::ostream& os, std::span<const TripleRow> rows);

/// A header-indexed CSV table. Cells are kept as text.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(const std::string& name) const;
};

/// Throws ValidationError on ragged rows. Empty text gives an empty table.
CsvTable parse_csv(const std::string& text);

/// Per-quantity point lists (hd12, hd13, hd23, value) for 3-axis plots.
/// Tables are merged on (cw1, cw2, cw3); the first table fixes row order.
/// Quantities: accuracy, precision, negative_prediction, sensitivity,
/// specificity, factor. Throws ValidationError naming missing columns.
std::map<std::string, CsvTable> plot_grids(std::span<const CsvTable> tables);

}  // namespace snnpat
