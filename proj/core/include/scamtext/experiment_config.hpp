#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scamtext/model.hpp"
#include "scamtext/types.hpp"

namespace scamtext {

struct FeatureOptions {
  bool lowercase = true;
  std::size_t min_df = 1;
  /// Scale every tf-idf vector to unit length before training/scoring.
  bool l2_normalize = true;
};

/// Which numbers feed the significance test: one value per (run, fold), or
/// one per-run mean over folds.
enum class SampleMode { per_fold, per_run };
/// Plain paired t-test, or the variance-corrected resampled variant.
enum class TestVariant { paired, corrected };

struct ExperimentConfig {
  std::size_t runs = 5;
  std::size_t folds = 10;
  double test_fraction = 0.2;
  double alpha = 0.05;
  std::uint64_t seed = 42;
  bool stratified = true;
  std::vector<SubDataset> subdatasets{SubDataset::A, SubDataset::B, SubDataset::C, SubDataset::D};
  FeatureOptions features;
  NaiveBayesParams nb;
  SvmParams svm;
  KnnParams knn;
  SampleMode samples = SampleMode::per_fold;
  TestVariant test = TestVariant::paired;
  /// Re-draws of the fold partition allowed when a fold yields an undefined
  /// headline metric.
  std::size_t max_fold_reseeds = 5;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;

  ClassifierConfig classifier(ClassifierKind kind) const;
};

inline constexpr int kExperimentConfigSchemaVersion = 1;

/// Parses the versioned JSON config. Missing keys keep their defaults;
/// unknown keys and out-of-range values throw ConfigError. The result is
/// validated.
ExperimentConfig experiment_config_from_json(std::string_view text);
std::string experiment_config_to_json(const ExperimentConfig& config, int indent = 2);

std::string_view to_string(SampleMode mode) noexcept;
std::string_view to_string(TestVariant variant) noexcept;

}  // namespace scamtext
