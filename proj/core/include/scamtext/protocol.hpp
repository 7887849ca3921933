#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scamtext/corpus.hpp"
#include "scamtext/experiment_config.hpp"
#include "scamtext/metrics.hpp"
#include "scamtext/model.hpp"

namespace scamtext {

/// k disjoint index sets covering 0..n-1, each sorted, sizes differing by at
/// most one. With labels, each class is dealt round-robin so every fold gets
/// its share of both classes. Throws ConfigError when k < 2 or k > n.
std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t k, std::uint64_t seed,
                                                    std::span<const Label> stratify_labels = {});

/// Scores and labels for one evaluated set, kept for curve output.
struct ScoredSet {
  std::vector<double> scores;
  std::vector<Label> predicted;
  std::vector<Label> truth;
};

/// Fits the vocabulary on `train` only, trains the classifier and scores
/// `test`. Throws CellFailure when an SVM fails to converge.
EvalReport train_and_evaluate(const LabeledCorpus& train, const LabeledCorpus& test, NgramOrder order,
                              const FeatureOptions& features, const ClassifierConfig& classifier,
                              ScoredSet* scored = nullptr);

/// k-fold cross-validation with the vocabulary rebuilt inside every fold.
/// Reports come back in fold order.
std::vector<EvalReport> cross_validate(const LabeledCorpus& corpus, NgramOrder order, const FeatureOptions& features,
                                       const ClassifierConfig& classifier, std::size_t k, std::uint64_t seed,
                                       bool stratified = true);

enum class MetricId { f1, roc_area, pr_area };
inline constexpr MetricId kComparedMetrics[] = {MetricId::roc_area, MetricId::pr_area, MetricId::f1};

std::string_view to_string(MetricId metric) noexcept;

/// The headline value used for significance testing: weighted F1, ROC area
/// or PR area.
Metric headline(const EvalReport& report, MetricId metric) noexcept;

struct ClassifierCell {
  std::vector<EvalReport> folds;
  std::optional<EvalReport> holdout;
  ScoredSet holdout_scores;
  std::optional<std::string> failure;
};

struct RunRecord {
  std::size_t run = 0;  // 1-based
  std::uint64_t split_seed = 0;
  std::uint64_t fold_seed = 0;
  std::size_t fold_attempts = 1;
  std::array<ClassifierCell, 3> cells;  // indexed by ClassifierKind

  const ClassifierCell& cell(ClassifierKind k) const { return cells[static_cast<std::size_t>(k)]; }
  ClassifierCell& cell(ClassifierKind k) { return cells[static_cast<std::size_t>(k)]; }
};

struct SubDatasetResult {
  SubDataset id = SubDataset::A;
  NgramOrder order = NgramOrder::unigram;
  std::size_t n_docs = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::vector<RunRecord> runs;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string corpus_provenance;
  std::size_t corpus_size = 0;
  std::vector<SubDatasetResult> subdatasets;
  /// Notable events in deterministic (sub-dataset, run) order: fold re-seeds,
  /// failed cells.
  std::vector<std::string> events;
};

/// Seed derivation, all through derive_seed():
///   run_seed   = derive_seed(master, run)                (run is 1-based)
///   split_seed = derive_seed(run_seed, 0x5D00 + sd)      (sd: A=0 .. D=3)
///   fold_seed  = derive_seed(split_seed, 0xF000 + attempt)
std::uint64_t run_seed(std::uint64_t master, std::size_t run) noexcept;
std::uint64_t split_seed(std::uint64_t master, std::size_t run, SubDataset sd) noexcept;
std::uint64_t fold_seed(std::uint64_t split_seed, std::size_t attempt) noexcept;

/// Repeated 80/20 + k-fold protocol over every configured sub-dataset and all
/// three classifiers. Cells (sub-dataset x run) may run on `jobs` threads;
/// the result does not depend on `jobs`. Throws ConfigError for an invalid
/// config and CorpusError when a sub-dataset cannot be formed.
ExperimentResult run_experiment(const ExperimentConfig& config, const LabeledCorpus& corpus, std::size_t jobs = 1);

/// Significance samples for one classifier: per (run, fold) values or
/// per-run means, per the config. nullopt if any cell failed or any value is
/// undefined.
std::optional<std::vector<double>> significance_samples(const SubDatasetResult& sd, ClassifierKind kind,
                                                        MetricId metric, SampleMode mode);

enum class Verdict { accept, reject, not_reject };

/// accept: p < alpha and SVM mean higher; reject: p < alpha and SVM mean
/// lower; otherwise not_reject.
Verdict verdict(double svm_mean, double other_mean, double p, double alpha) noexcept;
std::string_view to_string(Verdict v) noexcept;

struct ComparisonResult {
  SubDataset subdataset = SubDataset::A;
  MetricId metric = MetricId::roc_area;
  ClassifierKind other = ClassifierKind::naive_bayes;
  double svm_mean = 0.0;
  double svm_std = 0.0;
  double other_mean = 0.0;
  double other_std = 0.0;
  double t = 0.0;
  double p = 1.0;
  std::size_t n = 0;
  Verdict verdict = Verdict::not_reject;
};

/// SVM against `other` on one sub-dataset and metric; nullopt when samples
/// are unavailable.
std::optional<ComparisonResult> compare_with_svm(const SubDatasetResult& sd, MetricId metric, ClassifierKind other,
                                                 const ExperimentConfig& config);

}  // namespace scamtext
