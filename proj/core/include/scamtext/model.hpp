#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "scamtext/knn.hpp"
#include "scamtext/naive_bayes.hpp"
#include "scamtext/svm.hpp"

namespace scamtext {

enum class ClassifierKind { naive_bayes = 0, svm = 1, knn = 2 };

inline constexpr ClassifierKind kAllClassifiers[] = {ClassifierKind::naive_bayes, ClassifierKind::svm,
                                                     ClassifierKind::knn};

struct NaiveBayesParams {
  double alpha = 1.0;
  /// Feed tf-idf weights instead of raw counts.
  bool tfidf_input = false;
};

using ClassifierConfig = std::variant<NaiveBayesParams, SvmParams, KnnParams>;
using TrainedModel = std::variant<NaiveBayesModel, SvmModel, KnnModel>;

ClassifierKind kind_of(const ClassifierConfig& config) noexcept;
ClassifierKind kind_of(const TrainedModel& model) noexcept;

/// Short display names used in tables: NB, SVM, kNN.
std::string_view display_name(ClassifierKind kind) noexcept;
/// Identifiers used in file names and flags: nb, svm, knn.
std::string_view slug(ClassifierKind kind) noexcept;

/// Score above which the hard label is scam: 0 for NB/SVM, 0.5 for kNN.
double decision_threshold(ClassifierKind kind) noexcept;

inline Label label_for(ClassifierKind kind, double score) noexcept {
  return score > decision_threshold(kind) ? Label::scam : Label::not_scam;
}

TrainedModel train(const ClassifierConfig& config, std::span<const SparseVector> X, std::span<const Label> y);

/// Real-valued scam score; higher means more scam-like.
double score(const TrainedModel& model, const SparseVector& x);
Label predict(const TrainedModel& model, const SparseVector& x);

/// Versioned JSON document. Doubles are written in shortest round-trip form,
/// so model_from_json(model_to_json(m)) scores bit-identically to m.
std::string model_to_json(const TrainedModel& model);
/// Throws ConfigError on malformed or unsupported documents.
TrainedModel model_from_json(std::string_view text);

}  // namespace scamtext
