#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scamtext/types.hpp"

namespace scamtext {

/// Undefined metrics (zero denominators) are nullopt and render as "n/a".
using Metric = std::optional<double>;

struct ConfusionMatrix {
  std::uint64_t s_s = 0;    // scam classified as scam
  std::uint64_t s_ns = 0;   // scam classified as not_scam
  std::uint64_t ns_s = 0;   // not_scam classified as scam
  std::uint64_t ns_ns = 0;  // not_scam classified as not_scam

  std::uint64_t total() const noexcept { return s_s + s_ns + ns_s + ns_ns; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Throws std::invalid_argument on length mismatch or empty input.
ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> truth);

/// Scam-class metrics: recall = s_s/(s_s+s_ns), precision = s_s/(s_s+ns_s).
Metric recall(const ConfusionMatrix& m) noexcept;
Metric precision(const ConfusionMatrix& m) noexcept;
/// Harmonic mean 2PR/(P+R); undefined when either input is, or P+R = 0.
Metric f1(const ConfusionMatrix& m) noexcept;
Metric f1(Metric p, Metric r) noexcept;

struct ClassMetrics {
  Metric precision;
  Metric recall;
  Metric f1;
  std::uint64_t support = 0;
};

ClassMetrics class_metrics(const ConfusionMatrix& m, Label cls) noexcept;

struct WeightedMetrics {
  Metric precision;
  Metric recall;
  Metric f1;
};

/// Support-weighted mean of each metric independently. A class with nonzero
/// support and an undefined metric makes that weighted metric undefined.
/// Throws std::invalid_argument when total support is zero.
WeightedMetrics weighted_report(std::span<const ClassMetrics> per_class);

/// Area under the ROC curve as the rank statistic
/// (concordant + 0.5 tied) / (P * N). Undefined unless both classes occur.
Metric roc_area(std::span<const double> scores, std::span<const Label> truth);

/// Average precision sum_k (R_k - R_{k-1}) P_k over descending score
/// thresholds, equal scores forming one threshold. Undefined without positives.
Metric pr_area(std::span<const double> scores, std::span<const Label> truth);

struct RocPoint {
  double threshold;
  double fpr;
  double tpr;
};

struct PrPoint {
  double threshold;
  double recall;
  double precision;
};

/// Curve points in descending threshold order. The ROC list starts at
/// (+inf, 0, 0).
std::vector<RocPoint> roc_points(std::span<const double> scores, std::span<const Label> truth);
std::vector<PrPoint> pr_points(std::span<const double> scores, std::span<const Label> truth);

void write_roc_csv(std::ostream& out, std::span<const RocPoint> points);
void write_pr_csv(std::ostream& out, std::span<const PrPoint> points);

struct EvalReport {
  ConfusionMatrix confusion;
  ClassMetrics scam;
  ClassMetrics not_scam;
  WeightedMetrics weighted;
  Metric roc_area;
  Metric pr_area;
};

/// Full report for one evaluated set; `predicted` must be derived from
/// `scores` by the classifier's own threshold.
EvalReport evaluate(std::span<const double> scores, std::span<const Label> predicted,
                    std::span<const Label> truth);

/// Fixed-point rendering, "n/a" for undefined values.
std::string format_metric(Metric value, int decimals);

}  // namespace scamtext
