#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "scamtext/sparse_vector.hpp"
#include "scamtext/types.hpp"

namespace scamtext {

/// Multinomial Naive Bayes with additive (Laplace) smoothing. Feature weights
/// are treated as (possibly fractional) counts. Arrays are indexed by
/// static_cast<size_t>(Label).
class NaiveBayesModel {
 public:
  NaiveBayesModel() = default;
  NaiveBayesModel(double alpha, std::array<double, 2> log_prior,
                  std::array<std::vector<double>, 2> log_likelihood);

  double alpha() const noexcept { return alpha_; }
  std::size_t vocab_size() const noexcept { return log_likelihood_[0].size(); }
  double log_prior(Label c) const noexcept { return log_prior_[static_cast<std::size_t>(c)]; }
  std::span<const double> log_likelihood(Label c) const noexcept {
    return log_likelihood_[static_cast<std::size_t>(c)];
  }

  /// log P(scam | x) - log P(not_scam | x), computed in log space.
  double score(const SparseVector& x) const;
  Label predict(const SparseVector& x) const { return score(x) > 0.0 ? Label::scam : Label::not_scam; }

 private:
  double alpha_ = 1.0;
  std::array<double, 2> log_prior_{};
  std::array<std::vector<double>, 2> log_likelihood_;
};

/// Throws std::invalid_argument when sizes disagree, a class is missing,
/// alpha <= 0, a weight is negative or dimensions are inconsistent.
NaiveBayesModel train_naive_bayes(std::span<const SparseVector> X, std::span<const Label> y,
                                  double alpha = 1.0);

}  // namespace scamtext
