#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scamtext/sparse_vector.hpp"
#include "scamtext/types.hpp"

namespace scamtext {

enum class Distance { euclidean, cosine };

struct KnnParams {
  std::size_t k = 1;
  Distance distance = Distance::euclidean;
};

/// Instance-based classifier. The score is the fraction of scam documents
/// among the k nearest training vectors; equal distances favour the lower
/// training index.
class KnnModel {
 public:
  KnnModel() = default;
  /// Throws std::invalid_argument if sizes disagree, k == 0 or k > |X|.
  KnnModel(std::vector<SparseVector> X, std::vector<Label> y, KnnParams params);

  double score(const SparseVector& x) const;
  Label predict(const SparseVector& x) const { return score(x) > 0.5 ? Label::scam : Label::not_scam; }

  /// Distance under the model's metric. Cosine distance is 1 - cos, and 1
  /// when either vector is zero.
  double distance(const SparseVector& a, std::size_t train_index) const;

  const KnnParams& params() const noexcept { return params_; }
  std::span<const SparseVector> training_vectors() const noexcept { return X_; }
  std::span<const Label> training_labels() const noexcept { return y_; }

 private:
  std::vector<SparseVector> X_;
  std::vector<Label> y_;
  std::vector<double> norms_;
  KnnParams params_;
};

inline KnnModel train_knn(std::span<const SparseVector> X, std::span<const Label> y, const KnnParams& params = {}) {
  return KnnModel(std::vector<SparseVector>(X.begin(), X.end()), std::vector<Label>(y.begin(), y.end()), params);
}

}  // namespace scamtext
