#pragma once

#include <optional>
#include <span>

#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/rng.hpp"
#include "cauchy_angles/sample_set.hpp"

namespace cauchy_angles {

/// Coefficients of U = (gamma C1 + delta C2) / (alpha - beta C1 C2).
///
/// beta, gamma, delta are nonnegative, gamma and delta are not both zero and
/// alpha + beta != 0. Negative gamma or delta reduce to this case through the
/// symmetry C ~ -C and are left to the caller.
class MobiusCoeffs {
 public:
  /// Throws std::invalid_argument when the invariants above fail.
  MobiusCoeffs(double alpha, double beta, double gamma, double delta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }

 private:
  double alpha_, beta_, gamma_, delta_;
};

/// The four standard-Cauchy-preserving maps of a pair of standard Cauchy
/// variables.
enum class TransformKind {
  U,   // (c1 + c2) / (1 - c1 c2)
  Z1,  // (c1 c2 + 1) / (c1 - c2)
  Z2,  // (1 - c1 c2) / (c1 + c2)
  Z3,  // (c1 + c2) / (c1 c2 - 1)
};

const char* to_string(TransformKind kind);

/// Law of U for standard inputs: scale |(gamma + delta) / (alpha + beta)|,
/// location 0.
CauchyParams centered_params(const MobiusCoeffs& m);

/// Law of U for inputs C(a1, 0), C(a2, 0): scale
/// |(gamma a1 + delta a2) / (alpha + beta a1 a2)|, location 0.
CauchyParams scaled_centered_params(const MobiusCoeffs& m, double a1,
                                    double a2);

/// Law of (C1 + C2) / (1 - C1 C2) for independent C1 ~ p1, C2 ~ p2.
///
/// With P = 1 + a1 a2 - b1 b2, Q = a1 b2 + a2 b1 and D = P^2 + Q^2:
///   scale    = ((a1 + a2) P + (b1 + b2) Q) / D
///   location = ((b1 + b2) P - (a1 + a2) Q) / D
/// i.e. the complex parameter b + i a maps as (z1 + z2) / (1 - z1 z2).
/// Throws std::domain_error when D == 0.
CauchyParams noncentered_params(const CauchyParams& p1,
                                const CauchyParams& p2);

/// Law of tan(arctan C1 + ... + arctan Cn), folded left to right through
/// noncentered_params. Throws std::invalid_argument on an empty sequence.
CauchyParams arctan_sum_params(std::span<const CauchyParams> ps);

/// Pointwise value of a map; std::nullopt marks a pole (zero denominator or a
/// non-finite result).
std::optional<double> eval_transform(TransformKind kind, double c1, double c2);
std::optional<double> eval_general(const MobiusCoeffs& m, double c1,
                                   double c2);

/// n finite draws of kind(C1, C2) for independent C1 ~ p1, C2 ~ p2 (standard
/// by default). Pole hits are redrawn and counted.
SampleSet sample_transform(TransformKind kind, RngSeed seed, std::size_t n,
                           const CauchyParams& p1 = CauchyParams::standard(),
                           const CauchyParams& p2 = CauchyParams::standard());

/// n finite draws of eval_general(m, C1, C2).
SampleSet sample_general(const MobiusCoeffs& m, RngSeed seed, std::size_t n,
                         const CauchyParams& p1 = CauchyParams::standard(),
                         const CauchyParams& p2 = CauchyParams::standard());

}  // namespace cauchy_angles
