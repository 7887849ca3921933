#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "scamtext/metrics.hpp"
#include "scamtext/protocol.hpp"

namespace scamtext {

/// One rendered table in both output formats.
struct RenderedTable {
  std::string name;  // file stem, e.g. "metrics-A" or "compare-roc_area"
  std::string title;
  std::string csv;
  std::string markdown;
};

struct ReportSet {
  std::vector<RenderedTable> tables;
  /// Cells that rendered as "n/a" because a result was missing or undefined.
  std::vector<std::string> missing;

  bool complete() const noexcept { return missing.empty() && !tables.empty(); }
};

/// "NB | 0.915 | 0.911 | 0.911 | 0.964 | 0.960": precision, recall, F-measure,
/// ROC area, PRC at 3 decimals.
std::string format_metrics_row(std::string_view label, const std::array<Metric, 5>& values);

/// "0.93 ±0.02 | 0.95 ±0.01 | Not Reject".
std::string format_comparison_cell(double svm_mean, double svm_std, double other_mean, double other_std, Verdict v);

/// Hold-out summaries per sub-dataset (weighted and scam-class variants) and
/// one SVM comparison table per compared metric. With `strict`, an incomplete
/// set throws CellFailure instead of returning.
ReportSet emit_tables(const ExperimentResult& result, bool strict = false);

/// Hold-out values averaged over runs for one classifier: weighted (or
/// scam-class) precision, recall, F1, then ROC area and PR area.
std::array<Metric, 5> holdout_summary(const SubDatasetResult& sd, ClassifierKind kind, bool scam_class = false);

}  // namespace scamtext
