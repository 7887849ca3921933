#include "scamtext/naive_bayes.hpp"

#include <cmath>
#include <stdexcept>

namespace scamtext {

NaiveBayesModel::NaiveBayesModel(double alpha, std::array<double, 2> log_prior,
                                 std::array<std::vector<double>, 2> log_likelihood)
    : alpha_(alpha), log_prior_(log_prior), log_likelihood_(std::move(log_likelihood)) {
  if (log_likelihood_[0].size() != log_likelihood_[1].size())
    throw std::invalid_argument("naive bayes: class likelihood tables differ in size");
}

double NaiveBayesModel::score(const SparseVector& x) const {
  if (x.dim() != vocab_size()) throw std::invalid_argument("naive bayes: dimension mismatch");
  const auto& ls = log_likelihood_[static_cast<std::size_t>(Label::scam)];
  const auto& ln = log_likelihood_[static_cast<std::size_t>(Label::not_scam)];
  double s = log_prior(Label::scam) - log_prior(Label::not_scam);
  for (const auto& e : x.entries()) s += e.weight * (ls[e.index] - ln[e.index]);
  return s;
}

NaiveBayesModel train_naive_bayes(std::span<const SparseVector> X, std::span<const Label> y, double alpha) {
  if (X.size() != y.size() || X.empty()) throw std::invalid_argument("naive bayes: need |X| == |y| >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("naive bayes: alpha must be > 0");
  const std::size_t dim = X.front().dim();
  if (dim == 0) throw std::invalid_argument("naive bayes: zero-dimensional features");

  std::array<std::vector<double>, 2> mass{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
  std::array<double, 2> total{0.0, 0.0};
  std::array<std::size_t, 2> docs{0, 0};
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].dim() != dim) throw std::invalid_argument("naive bayes: inconsistent dimensions");
    const auto c = static_cast<std::size_t>(y[i]);
    ++docs[c];
    for (const auto& e : X[i].entries()) {
      if (e.weight < 0.0) throw std::invalid_argument("naive bayes: feature weights must be nonnegative");
      mass[c][e.index] += e.weight;
      total[c] += e.weight;
    }
  }
  if (docs[0] == 0 || docs[1] == 0) throw std::invalid_argument("naive bayes: both classes must be present");

  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> log_likelihood;
  const double n = static_cast<double>(X.size());
  for (std::size_t c = 0; c < 2; ++c) {
    log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
    const double denom = alpha * static_cast<double>(dim) + total[c];
    auto& ll = log_likelihood[c];
    ll.resize(dim);
    for (std::size_t t = 0; t < dim; ++t) ll[t] = std::log((alpha + mass[c][t]) / denom);
  }
  return NaiveBayesModel(alpha, log_prior, std::move(log_likelihood));
}

}  // namespace scamtext
