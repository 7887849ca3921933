#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "scamtext/sparse_vector.hpp"
#include "scamtext/types.hpp"

namespace scamtext {

enum class KernelType { linear, rbf };

struct Kernel {
  KernelType type = KernelType::linear;
  double gamma = 0.0;  // rbf only

  double operator()(const SparseVector& u, const SparseVector& v) const noexcept;
};

struct SvmParams {
  double C = 1.0;
  KernelType kernel = KernelType::linear;
  /// RBF width; unset means 1 / feature dimension.
  std::optional<double> gamma;
  /// Stopping threshold on the maximal KKT violation.
  double tol = 1e-3;
  /// Iteration budget, in units of the training-set size.
  std::size_t max_passes = 100;
  /// Record the dual objective after every update.
  bool record_trace = false;
};

struct SupportVector {
  SparseVector x;
  double y;      // +1 scam, -1 not_scam
  double alpha;  // in (0, C]
};

class SvmModel {
 public:
  SvmModel() = default;
  SvmModel(std::vector<SupportVector> svs, double bias, Kernel kernel, double C, bool converged);

  /// f(x) = sum_i alpha_i y_i K(x_i, x) + bias.
  double decision(const SparseVector& x) const;
  Label predict(const SparseVector& x) const { return decision(x) > 0.0 ? Label::scam : Label::not_scam; }

  std::span<const SupportVector> support_vectors() const noexcept { return svs_; }
  double bias() const noexcept { return bias_; }
  const Kernel& kernel() const noexcept { return kernel_; }
  double C() const noexcept { return C_; }
  bool converged() const noexcept { return converged_; }

 private:
  std::vector<SupportVector> svs_;
  double bias_ = 0.0;
  Kernel kernel_;
  double C_ = 1.0;
  bool converged_ = true;
};

struct SvmTrainResult {
  SvmModel model;
  /// Final multiplier for every training example (zeros included).
  std::vector<double> alphas;
  /// Dual objective after each update, when requested.
  std::vector<double> dual_objective;
  std::size_t iterations = 0;
  /// Largest KKT violation (m - M) at exit.
  double max_violation = 0.0;
};

/// Soft-margin C-SVM trained by sequential minimal optimisation with
/// maximal-violating-pair working-set selection. scam maps to +1.
/// Exhausting the iteration budget returns the last iterate with
/// model.converged() == false. Throws std::invalid_argument on bad input.
SvmTrainResult train_svm(std::span<const SparseVector> X, std::span<const Label> y, const SvmParams& params = {});

/// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double svm_dual_objective(std::span<const SparseVector> X, std::span<const Label> y,
                          std::span<const double> alphas, const Kernel& kernel);

}  // namespace scamtext
