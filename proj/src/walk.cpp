#include "cauchy_angles/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchy_angles {

using std::numbers::pi;

void EuclideanStepSpec::validate() const {
  if (!std::isfinite(d) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("EuclideanStepSpec: non-finite field");
  }
  if (!(d > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("EuclideanStepSpec: d and a must be > 0");
  }
}

void HyperbolicStep::validate() const {
  if (!std::isfinite(eta) || !std::isfinite(eta_hat) || !(eta > 0.0) ||
      !(eta_hat > 0.0)) {
    throw std::invalid_argument("HyperbolicStep: legs must be positive");
  }
}

namespace {

WalkPath accumulate(std::vector<double> angles) {
  WalkPath path;
  path.partial_sums.reserve(angles.size());
  path.tangents.reserve(angles.size());
  double sum = 0.0;
  for (double theta : angles) {
    sum += theta;
    path.partial_sums.push_back(sum);
    path.tangents.push_back(std::tan(sum));
  }
  path.angles = std::move(angles);
  return path;
}

// Sum of arctan over per-step substreams, one path per draw index.
template <class LawOf>
std::vector<double> walk_tangents(std::size_t n, LawOf law_of, RngSeed seed,
                                  std::size_t m) {
  std::vector<double> sums(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    Rng rng(seed.substream(j));
    const CauchyParams law = law_of(j);
    for (auto& s : sums) s += std::atan(quantile(law, rng.uniform_open()));
  }
  for (auto& s : sums) s = std::tan(s);
  return sums;
}

}  // namespace

WalkPath euclidean_walk(std::span<const EuclideanStepSpec> steps,
                        RngSeed seed) {
  if (steps.empty()) throw std::invalid_argument("euclidean_walk: no steps");
  std::vector<double> angles;
  angles.reserve(steps.size());
  for (std::size_t j = 0; j < steps.size(); ++j) {
    steps[j].validate();
    Rng rng(seed.substream(j));
    angles.push_back(
        std::atan(quantile(steps[j].angle_tangent_law(), rng.uniform_open())));
  }
  return accumulate(std::move(angles));
}

std::vector<double> euclidean_walk_tangents(
    std::span<const EuclideanStepSpec> steps, RngSeed seed, std::size_t m) {
  if (steps.empty()) {
    throw std::invalid_argument("euclidean_walk_tangents: no steps");
  }
  if (m == 0) throw std::invalid_argument("euclidean_walk_tangents: m == 0");
  for (const auto& s : steps) s.validate();
  return walk_tangents(
      steps.size(), [&](std::size_t j) { return steps[j].angle_tangent_law(); },
      seed, m);
}

HyperbolicAngles hyperbolic_angle(const HyperbolicStep& h) {
  h.validate();
  return {std::atan(std::tanh(h.eta_hat) / std::sinh(h.eta)),
          std::atan(std::tanh(h.eta) / std::sinh(h.eta_hat))};
}

double hyperbolic_triangle_area(const HyperbolicStep& h) {
  h.validate();
  const double x = 1.0 / (std::tanh(h.eta) * std::sinh(h.eta_hat)) +
                   1.0 / (std::tanh(h.eta_hat) * std::sinh(h.eta));
  // arccot on (0, inf).
  return std::atan2(1.0, x);
}

double hyperbolic_angle_defect(const HyperbolicStep& h) {
  const auto [theta, theta_hat] = hyperbolic_angle(h);
  return pi / 2 - theta - theta_hat;
}

WalkPath hyperbolic_walk(std::size_t n, RngSeed angle_seed) {
  if (n == 0) throw std::invalid_argument("hyperbolic_walk: n must be >= 1");
  const auto standard = CauchyParams::standard();
  std::vector<double> angles;
  angles.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rng rng(angle_seed.substream(j));
    angles.push_back(std::atan(quantile(standard, rng.uniform_open())));
  }
  return accumulate(std::move(angles));
}

std::vector<double> hyperbolic_walk_tangents(std::size_t n, RngSeed seed,
                                             std::size_t m) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("hyperbolic_walk_tangents: empty request");
  }
  return walk_tangents(
      n, [](std::size_t) { return CauchyParams::standard(); }, seed, m);
}

std::vector<double> uniform_angle_tangent(RngSeed seed, std::size_t m) {
  if (m == 0) throw std::invalid_argument("uniform_angle_tangent: m == 0");
  Rng rng(seed);
  std::vector<double> out(m);
  for (auto& w : out) {
    const double theta1 = pi * (rng.uniform_open() - 0.5);
    const double theta2 = pi * (rng.uniform_open() - 0.5);
    w = std::tan(theta1 + theta2);
  }
  return out;
}

}  // namespace cauchy_angles
