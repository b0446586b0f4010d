#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cauchy_angles/rng.hpp"

namespace cauchy_angles {

/// Scale and location of a Cauchy law C(a, b) with density
/// a / (pi [(x - b)^2 + a^2]).
class CauchyParams {
 public:
  /// Throws std::invalid_argument unless scale > 0 and both fields are finite.
  CauchyParams(double scale, double location);

  static CauchyParams standard() { return {1.0, 0.0}; }

  double scale() const { return scale_; }
  double location() const { return location_; }

  friend bool operator==(const CauchyParams&, const CauchyParams&) = default;

 private:
  double scale_;
  double location_;
};

double density(const CauchyParams& p, double x);
double cdf(const CauchyParams& p, double x);

/// Inverse CDF, b + a tan(pi (q - 1/2)). Requires 0 < q < 1.
double quantile(const CauchyParams& p, double q);

/// exp(i b t - a |t|).
std::complex<double> char_fn(const CauchyParams& p, double t);

/// n inverse-CDF draws. Deterministic in (p, seed, n).
std::vector<double> sample(const CauchyParams& p, RngSeed seed, std::size_t n);

/// n draws of x + y G1/G2 with G1, G2 independent standard Gaussians: the
/// exit point on the real axis of a planar Brownian motion started at (x, y).
/// Independent of `sample`; used to cross-check it.
std::vector<double> sample_brownian_hitting(double x, double y, RngSeed seed,
                                            std::size_t n);

}  // namespace cauchy_angles
