#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/rng.hpp"

namespace cauchy_angles {

/// A planar step: deterministic leg of length d along the current line, then
/// an orthogonal C(a, b) leg. The turning angle has tan(theta) ~ C(a/d, b/d).
struct EuclideanStepSpec {
  double d = 1.0;
  double a = 1.0;
  double b = 0.0;

  /// Throws std::invalid_argument unless d > 0, a > 0, all finite.
  void validate() const;
  CauchyParams angle_tangent_law() const { return {a / d, b / d}; }
};

/// Legs of a hyperbolic right triangle, measured along orthogonal geodesics.
struct HyperbolicStep {
  double eta = 1.0;
  double eta_hat = 1.0;

  /// Throws std::invalid_argument unless both legs are positive and finite.
  void validate() const;
};

struct HyperbolicAngles {
  double theta;      // opposite eta_hat: arctan(tanh eta_hat / sinh eta)
  double theta_hat;  // opposite eta:     arctan(tanh eta / sinh eta_hat)
};

/// Angles theta_j, partial sums S_j and tan(S_j). Sums are not wrapped.
struct WalkPath {
  std::vector<double> angles;
  std::vector<double> partial_sums;
  std::vector<double> tangents;
};

/// One path. Step j draws from seed.substream(j), so this is path 0 of
/// `euclidean_walk_tangents` with the same seed.
WalkPath euclidean_walk(std::span<const EuclideanStepSpec> steps,
                        RngSeed seed);

/// tan(S_n) for m independent paths.
std::vector<double> euclidean_walk_tangents(
    std::span<const EuclideanStepSpec> steps, RngSeed seed, std::size_t m);

HyperbolicAngles hyperbolic_angle(const HyperbolicStep& h);

/// pi/2 minus the two acute angles, evaluated through the closed form
/// arccot(coth eta / sinh eta_hat + coth eta_hat / sinh eta).
double hyperbolic_triangle_area(const HyperbolicStep& h);

/// Same area from the angle defect pi/2 - theta - theta_hat.
double hyperbolic_angle_defect(const HyperbolicStep& h);

/// n steps of the hyperbolic angular walk with theta_j = arctan C_j, C_j
/// standard Cauchy drawn from angle_seed.substream(j).
WalkPath hyperbolic_walk(std::size_t n, RngSeed angle_seed);

/// tan(S_n) for m independent hyperbolic walks of n steps.
std::vector<double> hyperbolic_walk_tangents(std::size_t n, RngSeed seed,
                                             std::size_t m);

/// m draws of tan(theta1 + theta2) with (theta1, theta2) uniform on
/// (-pi/2, pi/2)^2.
std::vector<double> uniform_angle_tangent(RngSeed seed, std::size_t m);

}  // namespace cauchy_angles
