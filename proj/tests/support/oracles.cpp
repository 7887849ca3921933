#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace oracle {

std::optional<double> roc_pairs(std::span<const double> scores, std::span<const Label> truth) {
  std::uint64_t twice = 0, pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (truth[i] != Label::scam) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (truth[j] != Label::not_scam) continue;
      ++pairs;
      if (scores[i] > scores[j]) twice += 2;
      else if (scores[i] == scores[j]) twice += 1;
    }
  }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(twice) / static_cast<double>(2 * pairs);
}

std::optional<double> ap_sweep(std::span<const double> scores, std::span<const Label> truth) {
  const auto positives = static_cast<double>(std::count(truth.begin(), truth.end(), Label::scam));
  if (positives == 0) return std::nullopt;
  std::set<double, std::greater<>> thresholds(scores.begin(), scores.end());
  double ap = 0.0, prev_recall = 0.0;
  for (double t : thresholds) {
    double tp = 0, predicted = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= t) {
        ++predicted;
        if (truth[i] == Label::scam) ++tp;
      }
    }
    const double recall = tp / positives;
    ap += (recall - prev_recall) * (tp / predicted);
    prev_recall = recall;
  }
  return ap;
}

double nb_log_odds(const std::vector<std::vector<unsigned>>& docs, std::span<const Label> labels, double alpha,
                   const std::vector<unsigned>& x) {
  const std::size_t V = x.size();
  double joint[2];
  for (int c = 0; c < 2; ++c) {
    const Label cls = c == 1 ? Label::scam : Label::not_scam;
    std::vector<double> counts(V, 0.0);
    double n_docs = 0, total = 0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      if (labels[d] != cls) continue;
      ++n_docs;
      for (std::size_t w = 0; w < V; ++w) {
        counts[w] += docs[d][w];
        total += docs[d][w];
      }
    }
    double p = n_docs / static_cast<double>(docs.size());
    for (std::size_t w = 0; w < V; ++w) {
      const double pw = (counts[w] + alpha) / (total + alpha * static_cast<double>(V));
      for (unsigned k = 0; k < x[w]; ++k) p *= pw;
    }
    joint[c] = p;
  }
  return std::log(joint[1]) - std::log(joint[0]);
}

double incomplete_beta(double a, double b, double x) { return boost::math::ibeta(a, b, x); }

double t_two_tailed_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  return boost::math::ibeta(df / 2.0, 0.5, df / (df + t * t));
}

double paired_t(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
  const double m = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (v - m) * (v - m);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return m / (sd / std::sqrt(static_cast<double>(n)));
}

double svm_kkt_residual(std::span<const scamtext::SparseVector> X, std::span<const Label> y,
                        std::span<const double> alphas, const scamtext::SvmModel& model) {
  const double C = model.C();
  double worst = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double yi = y[i] == Label::scam ? 1.0 : -1.0;
    const double margin = yi * model.decision(X[i]);
    double r = 0.0;
    if (alphas[i] < C) r = std::max(r, 1.0 - margin);
    if (alphas[i] > 0.0) r = std::max(r, margin - 1.0);
    worst = std::max(worst, r);
  }
  return worst;
}

double svm_equality_residual(std::span<const Label> y, std::span<const double> alphas) {
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += (y[i] == Label::scam ? 1.0 : -1.0) * alphas[i];
  return std::abs(s);
}

}  // namespace oracle
