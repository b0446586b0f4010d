#include "cauchy_angles/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cauchy_angles {

using std::numbers::pi;

CauchyParams::CauchyParams(double scale, double location)
    : scale_(scale), location_(location) {
  if (!std::isfinite(scale) || !std::isfinite(location)) {
    throw std::invalid_argument("CauchyParams: non-finite parameter");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("CauchyParams: scale must be positive");
  }
}

double density(const CauchyParams& p, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("density: non-finite x");
  const double z = (x - p.location()) / p.scale();
  return 1.0 / (pi * p.scale() * (1.0 + z * z));
}

double cdf(const CauchyParams& p, double x) {
  if (std::isnan(x)) throw std::invalid_argument("cdf: NaN argument");
  return 0.5 + std::atan((x - p.location()) / p.scale()) / pi;
}

double quantile(const CauchyParams& p, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("quantile: probability must lie in (0, 1)");
  }
  if (q == 0.5) return p.location();
  // Keep the tangent argument one epsilon inside (-pi/2, pi/2).
  constexpr double limit = pi / 2 - std::numeric_limits<double>::epsilon();
  const double angle = std::clamp(pi * (q - 0.5), -limit, limit);
  return p.location() + p.scale() * std::tan(angle);
}

std::complex<double> char_fn(const CauchyParams& p, double t) {
  return std::polar(std::exp(-p.scale() * std::abs(t)), p.location() * t);
}

std::vector<double> sample(const CauchyParams& p, RngSeed seed,
                           std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample: n must be positive");
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = quantile(p, rng.uniform_open());
  return out;
}

std::vector<double> sample_brownian_hitting(double x, double y, RngSeed seed,
                                            std::size_t n) {
  if (!(y > 0.0) || !std::isfinite(y) || !std::isfinite(x)) {
    throw std::invalid_argument(
        "sample_brownian_hitting: start must satisfy y > 0");
  }
  if (n == 0) {
    throw std::invalid_argument("sample_brownian_hitting: n must be positive");
  }
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double num = rng.gaussian();
    const double den = rng.gaussian();
    if (den == 0.0) continue;
    out.push_back(x + y * (num / den));
  }
  return out;
}

}  // namespace cauchy_angles
