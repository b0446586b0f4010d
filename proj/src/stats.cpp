#include "cauchy_angles/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace cauchy_angles {

namespace {

constexpr int kGaussOrder = 16;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

// Legendre roots by Newton iteration, on [-1, 1].
GaussRule make_gauss_rule() {
  GaussRule rule;
  constexpr int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

}  // namespace

double ks_critical_constant(double alpha) {
  if (alpha == 0.05) return 1.36;
  if (alpha == 0.01) return 1.63;
  throw std::invalid_argument("ks_test: alpha must be 0.05 or 0.01");
}

double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  if (std::any_of(sorted.begin(), sorted.end(),
                  [](double x) { return std::isnan(x); })) {
    throw std::invalid_argument("ks_statistic: NaN sample");
  }
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    d = std::max({d, f - below, above - f});
  }
  return d;
}

GoFReport ks_test(std::span<const double> samples,
                  const std::function<double(double)>& cdf, double alpha,
                  std::size_t pole_discards) {
  const double c = ks_critical_constant(alpha);
  if (samples.size() < 100) {
    throw std::invalid_argument("ks_test: need at least 100 samples");
  }
  GoFReport r;
  r.n = samples.size();
  r.pole_discards = pole_discards;
  r.statistic = ks_statistic(samples, cdf);
  r.threshold = c / std::sqrt(static_cast<double>(r.n));
  const double pole_rate =
      static_cast<double>(pole_discards) / static_cast<double>(r.n);
  r.passed = r.statistic < r.threshold && pole_rate < kMaxPoleRate;
  return r;
}

GoFReport ks_test(const SampleSet& samples,
                  const std::function<double(double)>& cdf, double alpha) {
  return ks_test(samples.values, cdf, alpha, samples.pole_discards);
}

GoFReport ks_test(std::span<const double> samples, const CauchyParams& params,
                  double alpha, std::size_t pole_discards) {
  return ks_test(
      samples, [&](double x) { return cdf(params, x); }, alpha, pole_discards);
}

double ecf_distance(std::span<const double> samples, const CauchyParams& params,
                    std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("ecf_distance: empty grid");
  if (samples.empty()) throw std::invalid_argument("ecf_distance: no samples");
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (double t : t_grid) {
    double re = 0.0, im = 0.0;
    for (double x : samples) {
      re += std::cos(t * x);
      im += std::sin(t * x);
    }
    const std::complex<double> empirical(re / n, im / n);
    worst = std::max(worst, std::abs(empirical - char_fn(params, t)));
  }
  return worst;
}

QuadratureResult integrate_singular(const std::function<double(double)>& f,
                                    double lo, double hi, std::size_t budget,
                                    double tolerance) {
  if (!(lo < hi)) throw std::invalid_argument("integrate_singular: lo >= hi");
  const GaussRule& rule = gauss_rule();
  const double width = hi - lo;
  constexpr double quarter = std::numbers::pi / 4;

  // theta in (0, pi/2); du/dtheta = width sin(2 theta). The upper half is
  // measured from hi so that both endpoints are approached with full
  // relative precision.
  const auto integrand = [&](double theta) {
    const double jac = width * std::sin(2.0 * theta);
    if (theta <= quarter) {
      const double s = std::sin(theta);
      return f(lo + width * s * s) * jac;
    }
    const double c = std::cos(theta);
    return f(hi - width * c * c) * jac;
  };

  QuadratureResult result;
  double previous = 0.0;
  bool have_previous = false;
  for (std::size_t panels = 1;; panels *= 2) {
    if (result.evaluations + panels * kGaussOrder > budget) break;
    const double h = (std::numbers::pi / 2) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = (static_cast<double>(p) + 0.5) * h;
      double panel = 0.0;
      for (int i = 0; i < kGaussOrder; ++i) {
        panel += rule.weights[i] * integrand(mid + 0.5 * h * rule.nodes[i]);
      }
      sum += 0.5 * h * panel;
    }
    result.evaluations += panels * kGaussOrder;
    result.value = sum;
    if (have_previous) {
      result.abs_error_estimate = std::abs(sum - previous);
      if (result.abs_error_estimate <=
          tolerance * std::max(1.0, std::abs(sum))) {
        result.converged = true;
        break;
      }
    }
    previous = sum;
    have_previous = true;
  }
  return result;
}

std::vector<double> quantile_table(std::span<const double> samples,
                                   std::span<const double> probs) {
  if (samples.empty()) throw std::invalid_argument("quantile_table: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(probs.size());
  for (double p : probs) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::invalid_argument("quantile_table: probability outside (0, 1)");
    }
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto below = static_cast<std::size_t>(std::floor(h));
    const std::size_t above = std::min(below + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(below);
    out.push_back(sorted[below] + frac * (sorted[above] - sorted[below]));
  }
  return out;
}

}  // namespace cauchy_angles
