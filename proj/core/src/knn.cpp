#include "scamtext/knn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace scamtext {

KnnModel::KnnModel(std::vector<SparseVector> X, std::vector<Label> y, KnnParams params)
    : X_(std::move(X)), y_(std::move(y)), params_(params) {
  if (X_.size() != y_.size() || X_.empty()) throw std::invalid_argument("knn: need |X| == |y| >= 1");
  if (params_.k == 0 || params_.k > X_.size()) throw std::invalid_argument("knn: k must lie in [1, |X|]");
  norms_.reserve(X_.size());
  for (const auto& x : X_) norms_.push_back(std::sqrt(x.squared_norm()));
}

double KnnModel::distance(const SparseVector& a, std::size_t i) const {
  if (a.dim() != X_[i].dim()) throw std::invalid_argument("knn: dimension mismatch");
  if (params_.distance == Distance::euclidean) return std::sqrt(a.squared_distance(X_[i]));
  const double na = std::sqrt(a.squared_norm());
  if (na == 0.0 || norms_[i] == 0.0) return 1.0;
  return 1.0 - a.dot(X_[i]) / (na * norms_[i]);
}

double KnnModel::score(const SparseVector& x) const {
  std::vector<std::pair<double, std::size_t>> d;
  d.reserve(X_.size());
  for (std::size_t i = 0; i < X_.size(); ++i) d.emplace_back(distance(x, i), i);
  const auto k = static_cast<std::ptrdiff_t>(params_.k);
  std::partial_sort(d.begin(), d.begin() + k, d.end());  // pair order: distance, then index
  std::size_t scam = 0;
  for (std::ptrdiff_t r = 0; r < k; ++r)
    if (y_[d[static_cast<std::size_t>(r)].second] == Label::scam) ++scam;
  return static_cast<double>(scam) / static_cast<double>(params_.k);
}

}  // namespace scamtext
