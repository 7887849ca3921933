#include "scamtext/tables.hpp"

#include <cstdio>

#include "scamtext/error.hpp"
#include "scamtext/stats.hpp"

namespace scamtext {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out + "\n";
}

std::string subdataset_caption(const SubDatasetResult& sd) {
  const bool mixed = sd.id == SubDataset::C || sd.id == SubDataset::D;
  return std::string(mixed ? "English & Pidgin" : "English") + ", " +
         (sd.order == NgramOrder::unigram ? "unigram" : "bigram");
}

std::string_view metric_title(MetricId m) {
  switch (m) {
    case MetricId::f1: return "weighted F-measure";
    case MetricId::roc_area: return "ROC area";
    case MetricId::pr_area: return "PR area";
  }
  return "?";
}

const char* const kMetricHeader[] = {"Precision", "Recall", "F-Measure", "ROC Area", "PRC"};

RenderedTable metrics_table(const SubDatasetResult& sd, bool scam_class, std::vector<std::string>& missing) {
  RenderedTable t;
  const std::string sdname(to_string(sd.id));
  t.name = "metrics-" + sdname + (scam_class ? "-scam-class" : "");
  t.title = "Sub-dataset " + sdname + " (" + subdataset_caption(sd) + "): hold-out " +
            (scam_class ? "scam-class" : "weighted-average") + " metrics, mean of " + std::to_string(sd.runs.size()) +
            " runs";
  std::vector<std::string> header{"Classifier"};
  header.insert(header.end(), std::begin(kMetricHeader), std::end(kMetricHeader));
  t.markdown = "### " + t.title + "\n\n" + md_row(header) + md_rule(header.size());
  t.csv = "classifier,precision,recall,f_measure,roc_area,prc\n";
  for (ClassifierKind kind : kAllClassifiers) {
    const auto values = holdout_summary(sd, kind, scam_class);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i])
        missing.push_back(t.name + ": " + std::string(display_name(kind)) + " " + kMetricHeader[i]);
    }
    t.markdown += "| " + format_metrics_row(display_name(kind), values) + " |\n";
    std::vector<std::string> cells{std::string(display_name(kind))};
    for (const auto& v : values) cells.push_back(format_metric(v, 3));
    t.csv += csv_row(cells);
  }
  return t;
}

RenderedTable comparison_table(const ExperimentResult& result, MetricId metric, std::vector<std::string>& missing) {
  RenderedTable t;
  t.name = "compare-" + std::string(to_string(metric));
  t.title = "SVM against NB and kNN on " + std::string(metric_title(metric)) + " (mean ±sd over " +
            (result.config.samples == SampleMode::per_fold ? "run x fold" : "run") + " samples, two-tailed " +
            (result.config.test == TestVariant::paired ? "paired" : "corrected paired") + " t-test, alpha " +
            sci(result.config.alpha) + ")";
  const std::vector<std::string> header{"Sub-dataset", "SVM", "NB", "Hypothesis", "kNN", "Hypothesis"};
  t.markdown = "### " + t.title + "\n\n" + md_row(header) + md_rule(header.size());
  t.csv =
      "subdataset,svm_mean,svm_std,nb_mean,nb_std,nb_t,nb_p,nb_hypothesis,knn_mean,knn_std,knn_t,knn_p,"
      "knn_hypothesis\n";
  for (const auto& sd : result.subdatasets) {
    const std::string sdname(to_string(sd.id));
    std::string md = sdname;
    std::vector<std::string> csv{sdname};
    bool svm_written = false;
    for (ClassifierKind other : {ClassifierKind::naive_bayes, ClassifierKind::knn}) {
      const auto c = compare_with_svm(sd, metric, other, result.config);
      if (!c) {
        missing.push_back(t.name + ": " + sdname + " SVM vs " + std::string(display_name(other)));
        if (!svm_written) {
          md += " | n/a";
          csv.insert(csv.end(), {"n/a", "n/a"});
        }
        md += " | n/a | n/a";
        csv.insert(csv.end(), {"n/a", "n/a", "n/a", "n/a", "n/a"});
      } else {
        const std::string cell = format_comparison_cell(c->svm_mean, c->svm_std, c->other_mean, c->other_std, c->verdict);
        // The SVM column is shared by both comparisons; print it once.
        md += " | " + (svm_written ? cell.substr(cell.find(" | ") + 3) : cell);
        if (!svm_written) csv.insert(csv.end(), {fixed(c->svm_mean, 2), fixed(c->svm_std, 2)});
        csv.insert(csv.end(), {fixed(c->other_mean, 2), fixed(c->other_std, 2), fixed(c->t, 4), sci(c->p),
                               std::string(to_string(c->verdict))});
      }
      svm_written = true;
    }
    t.markdown += "| " + md + " |\n";
    t.csv += csv_row(csv);
  }
  return t;
}

}  // namespace

std::string format_metrics_row(std::string_view label, const std::array<Metric, 5>& values) {
  std::string out(label);
  for (const auto& v : values) out += " | " + format_metric(v, 3);
  return out;
}

std::string format_comparison_cell(double svm_mean, double svm_std, double other_mean, double other_std, Verdict v) {
  return fixed(svm_mean, 2) + " ±" + fixed(svm_std, 2) + " | " + fixed(other_mean, 2) + " ±" +
         fixed(other_std, 2) + " | " + std::string(to_string(v));
}

std::array<Metric, 5> holdout_summary(const SubDatasetResult& sd, ClassifierKind kind, bool scam_class) {
  std::array<std::vector<double>, 5> samples;
  std::array<bool, 5> undefined{};
  for (const auto& run : sd.runs) {
    const auto& cell = run.cell(kind);
    if (cell.failure || !cell.holdout) return {};
    const auto& r = *cell.holdout;
    const std::array<Metric, 5> v =
        scam_class ? std::array<Metric, 5>{r.scam.precision, r.scam.recall, r.scam.f1, r.roc_area, r.pr_area}
                   : std::array<Metric, 5>{r.weighted.precision, r.weighted.recall, r.weighted.f1, r.roc_area,
                                           r.pr_area};
    for (std::size_t i = 0; i < 5; ++i) {
      if (v[i])
        samples[i].push_back(*v[i]);
      else
        undefined[i] = true;
    }
  }
  std::array<Metric, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!undefined[i] && !samples[i].empty()) out[i] = mean(samples[i]);
  }
  return out;
}

ReportSet emit_tables(const ExperimentResult& result, bool strict) {
  ReportSet set;
  for (const auto& sd : result.subdatasets) {
    set.tables.push_back(metrics_table(sd, false, set.missing));
    set.tables.push_back(metrics_table(sd, true, set.missing));
  }
  if (!result.subdatasets.empty()) {
    for (MetricId m : kComparedMetrics) set.tables.push_back(comparison_table(result, m, set.missing));
  }
  if (strict && !set.complete()) {
    if (set.tables.empty()) throw CellFailure("no results to tabulate");
    throw CellFailure(std::to_string(set.missing.size()) + " table cells are n/a, first: " + set.missing.front());
  }
  return set;
}

}  // namespace scamtext
