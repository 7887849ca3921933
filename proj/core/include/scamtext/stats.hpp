#pragma once

#include <cstddef>
#include <span>

namespace scamtext {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_sd(std::span<const double> xs);

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// evaluated with the modified Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// P(|T| >= |t|) for Student's t with `df` degrees of freedom,
/// i.e. I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_tailed_p(double t, double df);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  double df = 0.0;
};

/// Paired two-tailed Student t-test on d_i = a_i - b_i. When sd(d) = 0 the
/// result is p = 1 for mean(d) = 0 and p = 0 otherwise (t = 0 or +/-inf).
/// Throws std::invalid_argument on length mismatch or fewer than 2 pairs.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

/// Nadeau-Bengio corrected resampled t-test: the variance of the mean
/// difference is scaled by (1/n + n_test/n_train) instead of 1/n.
TTestResult corrected_paired_t_test(std::span<const double> a, std::span<const double> b,
                                    double test_train_ratio);

}  // namespace scamtext
