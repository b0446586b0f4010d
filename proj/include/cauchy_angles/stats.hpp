#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/sample_set.hpp"

namespace cauchy_angles {

/// Largest tolerated pole_discards / n.
inline constexpr double kMaxPoleRate = 1e-5;

struct GoFReport {
  double statistic = 0.0;
  double threshold = 0.0;
  std::size_t n = 0;
  std::size_t pole_discards = 0;
  bool passed = false;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// False when the budget ran out before the tolerance was met.
  bool converged = false;
};

/// Asymptotic KS critical constant c(alpha); alpha must be 0.05 or 0.01.
double ks_critical_constant(double alpha);

/// sup |F_n - F| over the sorted samples.
double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf);

/// One-sample Kolmogorov-Smirnov test with threshold c(alpha) / sqrt(n).
/// Passes iff statistic < threshold and pole_discards / n < kMaxPoleRate.
/// Throws std::invalid_argument for n < 100, NaN samples or a bad alpha.
GoFReport ks_test(std::span<const double> samples,
                  const std::function<double(double)>& cdf, double alpha,
                  std::size_t pole_discards = 0);

GoFReport ks_test(const SampleSet& samples,
                  const std::function<double(double)>& cdf, double alpha);

/// KS test against the closed-form CDF of `params`.
GoFReport ks_test(std::span<const double> samples, const CauchyParams& params,
                  double alpha, std::size_t pole_discards = 0);

/// max over t of |(1/n) sum exp(i t X_k) - char_fn(params, t)|.
double ecf_distance(std::span<const double> samples, const CauchyParams& params,
                    std::span<const double> t_grid);

/// Integral of f over (lo, hi) after the substitution
/// u = lo + (hi - lo) sin^2(theta), which absorbs inverse-square-root
/// singularities at both ends. Composite Gauss-Legendre panels are doubled
/// until successive estimates agree to `tolerance` or the evaluation budget is
/// spent.
QuadratureResult integrate_singular(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    std::size_t budget = 1 << 18,
                                    double tolerance = 1e-13);

/// Order-statistic quantiles with linear interpolation between neighbours.
std::vector<double> quantile_table(std::span<const double> samples,
                                   std::span<const double> probs);

}  // namespace cauchy_angles
