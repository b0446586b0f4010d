#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/rational.hpp"
#include "cauchy_angles/rng.hpp"
#include "cauchy_angles/sample_set.hpp"

namespace cauchy_angles {

/// Exact Cauchy parameters of the n-th term of a reciprocal chain.
struct RationalPair {
  BigRational scale;
  BigRational location;
  unsigned n = 1;

  CauchyParams to_params() const {
    return {scale.to_double(), location.to_double()};
  }
  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

/// Coefficients of a step W -> 1 / (c + d W). d must be nonzero.
struct ChainStepCoeffs {
  double c = 1.0;
  double d = 1.0;
};

struct ExactChainStepCoeffs {
  BigRational c{1};
  BigRational d{1};
};

/// Integer pair fixing the law of U_n, with alpha_n = beta_{n-1},
/// beta_n = alpha_{n-1} + beta_{n-1} and (alpha_1, beta_1) = (1, 0).
struct ArcsineChainCoeffs {
  BigInt alpha;
  BigInt beta;
  unsigned n = 1;
};

struct Support {
  BigRational lo;
  BigRational hi;
};

/// F_0 = 0, F_1 = 1, F_k = F_{k-1} + F_{k-2}.
BigInt fibonacci(unsigned k);

/// (a, b) -> (a / D, (1 + b) / D) with D = (1 + b)^2 + a^2, the law of
/// 1 / (1 + V) for V ~ C(a, b).
RationalPair v_chain_step(const RationalPair& s);

/// Closed form a_n = 1 / F_{2n+1}, b_n = F_{2n} / F_{2n+1}. Requires n >= 1.
RationalPair v_chain_params(unsigned n);

/// Law of 1 / (c + d W) for W ~ C(a, b):
///   a' = |d| a / D,  b' = (c + d b) / D,  D = (c + d b)^2 + d^2 a^2.
/// Throws std::domain_error when D == 0 or d == 0.
RationalPair w_chain_step(const RationalPair& s, const ExactChainStepCoeffs& k);
CauchyParams w_chain_step(const CauchyParams& s, const ChainStepCoeffs& k);

ArcsineChainCoeffs u_chain_coeffs(unsigned n);

/// Open support of U_n. Even n: ((a+b)/(a+2b), b/(a+b)); odd n: reversed.
Support u_chain_support(unsigned n);

/// Law of U_n with its coefficients cached as doubles, for repeated
/// evaluation. Throws std::domain_error when the coefficients exceed 2^53.
class UChainLaw {
 public:
  explicit UChainLaw(unsigned n);

  unsigned n() const { return n_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Exact support length 1 / ((alpha + beta)(alpha + 2 beta)), rounded.
  double width() const { return width_; }

  /// Throws std::domain_error unless u lies strictly inside the support.
  double density(double u) const;

  /// Density of U_n at lo + width * t for t in (0, 1). The endpoint factors
  /// are taken in the local coordinate, so the result keeps full relative
  /// precision even where lo and hi are not representable.
  double density_local(double t) const;

 private:
  unsigned n_;
  double alpha_, beta_, sign_;
  double lo_, hi_, width_;
};

/// Density of U_n at u. Throws std::domain_error unless u lies strictly
/// inside the support, or when the coefficients exceed 2^53.
double u_chain_density(unsigned n, double u);

/// Law of U_t = t U_1 on (0, t).
double scaled_arcsine_density(double t, double s);
double scaled_arcsine_cdf(double t, double s);

/// m draws of 1/(1 + 1/(1 + ... 1/(1 + C))) with n levels. Pole hits are
/// redrawn and counted.
SampleSet sample_v_chain(unsigned n, RngSeed seed, std::size_t m);

/// m draws of W_k = 1 / (c_k + d_k W_{k-1}), W_0 ~ start.
SampleSet sample_w_chain(const CauchyParams& start,
                         std::span<const ChainStepCoeffs> steps, RngSeed seed,
                         std::size_t m);

/// m draws of U_n, starting from U_1 = 1 / (1 + C^2). U_n is evaluated as a
/// single Mobius image of U_1 to avoid compounding rounding.
std::vector<double> sample_u_chain(unsigned n, RngSeed seed, std::size_t m);

/// |b_n - (phi - 1)| evaluated in extended precision, rounded to double.
double golden_gap(unsigned n);

}  // namespace cauchy_angles
