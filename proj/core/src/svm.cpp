#include "scamtext/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scamtext {

namespace {
// Curvature floor for non positive-definite pairs (duplicated points).
constexpr double kTau = 1e-12;

double sign_of(Label l) { return l == Label::scam ? 1.0 : -1.0; }
}  // namespace

double Kernel::operator()(const SparseVector& u, const SparseVector& v) const noexcept {
  if (type == KernelType::linear) return u.dot(v);
  return std::exp(-gamma * u.squared_distance(v));
}

SvmModel::SvmModel(std::vector<SupportVector> svs, double bias, Kernel kernel, double C, bool converged)
    : svs_(std::move(svs)), bias_(bias), kernel_(kernel), C_(C), converged_(converged) {}

double SvmModel::decision(const SparseVector& x) const {
  double f = bias_;
  for (const auto& sv : svs_) {
    if (sv.x.dim() != x.dim()) throw std::invalid_argument("svm: dimension mismatch");
    f += sv.alpha * sv.y * kernel_(sv.x, x);
  }
  return f;
}

double svm_dual_objective(std::span<const SparseVector> X, std::span<const Label> y,
                          std::span<const double> alphas, const Kernel& kernel) {
  double linear = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    linear += alphas[i];
    if (alphas[i] == 0.0) continue;
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (alphas[j] == 0.0) continue;
      quad += alphas[i] * alphas[j] * sign_of(y[i]) * sign_of(y[j]) * kernel(X[i], X[j]);
    }
  }
  return linear - 0.5 * quad;
}

SvmTrainResult train_svm(std::span<const SparseVector> X, std::span<const Label> labels, const SvmParams& params) {
  const std::size_t n = X.size();
  if (n == 0 || labels.size() != n) throw std::invalid_argument("svm: need |X| == |y| >= 1");
  if (!(params.C > 0.0)) throw std::invalid_argument("svm: C must be > 0");
  if (!(params.tol > 0.0)) throw std::invalid_argument("svm: tol must be > 0");
  const std::size_t dim = X.front().dim();
  for (const auto& x : X)
    if (x.dim() != dim) throw std::invalid_argument("svm: inconsistent dimensions");
  if (std::none_of(labels.begin(), labels.end(), [](Label l) { return l == Label::scam; }) ||
      std::none_of(labels.begin(), labels.end(), [](Label l) { return l == Label::not_scam; }))
    throw std::invalid_argument("svm: both classes must be present");

  Kernel kernel{params.kernel, 0.0};
  if (params.kernel == KernelType::rbf) {
    kernel.gamma = params.gamma.value_or(dim > 0 ? 1.0 / static_cast<double>(dim) : 1.0);
    if (!(kernel.gamma > 0.0)) throw std::invalid_argument("svm: gamma must be > 0");
  }

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = sign_of(labels[i]);

  // Full Gram matrix; the corpora this tool targets keep n in the low thousands.
  std::vector<double> K(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double k = kernel(X[i], X[j]);
      K[i * n + j] = k;
      K[j * n + i] = k;
    }
  }

  const double C = params.C;
  std::vector<double> alpha(n, 0.0);
  // Gradient of the minimisation form 1/2 a'Qa - e'a, with Q_ij = y_i y_j K_ij.
  std::vector<double> G(n, -1.0);

  SvmTrainResult result;
  auto objective = [&] {
    double w = 0.0;
    for (std::size_t t = 0; t < n; ++t) w += alpha[t] * (1.0 - G[t]);
    return 0.5 * w;
  };
  auto in_up = [&](std::size_t t) { return y[t] > 0 ? alpha[t] < C : alpha[t] > 0.0; };
  auto in_low = [&](std::size_t t) { return y[t] > 0 ? alpha[t] > 0.0 : alpha[t] < C; };

  const std::size_t max_iter = std::max<std::size_t>(1, params.max_passes) * std::max<std::size_t>(n, 1);
  bool converged = false;
  double m_up = 0.0;
  double m_low = 0.0;
  std::size_t iter = 0;
  for (;; ++iter) {
    // v_t = -y_t G_t; optimality holds when max over I_up <= min over I_low.
    std::size_t i = n;
    std::size_t j = n;
    m_up = -std::numeric_limits<double>::infinity();
    m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * G[t];
      if (in_up(t) && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low(t) && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    if (i == n || j == n || m_up - m_low <= params.tol) {
      converged = true;
      break;
    }
    if (iter >= max_iter) break;

    // Move along d_i = y_i, d_j = -y_j by step s >= 0.
    double eta = K[i * n + i] + K[j * n + j] - 2.0 * K[i * n + j];
    if (eta <= 0.0) eta = kTau;
    double step = (m_up - m_low) / eta;
    step = std::min(step, y[i] > 0 ? C - alpha[i] : alpha[i]);
    step = std::min(step, y[j] > 0 ? alpha[j] : C - alpha[j]);

    alpha[i] += y[i] * step;
    alpha[j] -= y[j] * step;
    // Snap to the box to keep the index sets exact.
    for (std::size_t t : {i, j}) {
      if (alpha[t] < 1e-15 * C) alpha[t] = 0.0;
      if (alpha[t] > C * (1.0 - 1e-15)) alpha[t] = C;
    }
    for (std::size_t t = 0; t < n; ++t) G[t] += y[t] * step * (K[t * n + i] - K[t * n + j]);
    if (params.record_trace) result.dual_objective.push_back(objective());
  }

  // Bias: average of v over free vectors, else the midpoint of the bounds.
  double bias_sum = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0 && alpha[t] < C) {
      bias_sum += -y[t] * G[t];
      ++n_free;
    }
  }
  double bias;
  if (n_free > 0) {
    bias = bias_sum / static_cast<double>(n_free);
  } else if (std::isfinite(m_up) && std::isfinite(m_low)) {
    bias = 0.5 * (m_up + m_low);
  } else {
    bias = std::isfinite(m_up) ? m_up : (std::isfinite(m_low) ? m_low : 0.0);
  }

  std::vector<SupportVector> svs;
  for (std::size_t t = 0; t < n; ++t)
    if (alpha[t] > 0.0) svs.push_back({X[t], y[t], alpha[t]});

  result.model = SvmModel(std::move(svs), bias, kernel, C, converged);
  result.alphas = std::move(alpha);
  result.iterations = iter;
  result.max_violation = std::max(0.0, m_up - m_low);
  return result;
}

}  // namespace scamtext
