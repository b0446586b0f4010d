#include "cauchy_angles/continued_fraction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchy_angles {

using std::numbers::pi;

BigInt fibonacci(unsigned k) {
  BigInt prev = 0, cur = 1;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPair v_chain_step(const RationalPair& s) {
  const BigRational shifted = BigRational(1) + s.location;
  const BigRational den = shifted * shifted + s.scale * s.scale;
  if (den.sign() == 0) throw std::domain_error("v_chain_step: zero denominator");
  return {s.scale / den, shifted / den, s.n + 1};
}

RationalPair v_chain_params(unsigned n) {
  if (n == 0) throw std::invalid_argument("v_chain_params: n must be >= 1");
  const BigInt odd = fibonacci(2 * n + 1);
  return {BigRational(1, odd), BigRational(fibonacci(2 * n), odd), n};
}

RationalPair w_chain_step(const RationalPair& s,
                          const ExactChainStepCoeffs& k) {
  if (k.d.sign() == 0) throw std::domain_error("w_chain_step: d is zero");
  const BigRational shifted = k.c + k.d * s.location;
  const BigRational den = shifted * shifted + k.d * k.d * s.scale * s.scale;
  if (den.sign() == 0) throw std::domain_error("w_chain_step: zero denominator");
  const BigRational abs_d = k.d.sign() < 0 ? -k.d : k.d;
  return {abs_d * s.scale / den, shifted / den, s.n + 1};
}

CauchyParams w_chain_step(const CauchyParams& s, const ChainStepCoeffs& k) {
  if (k.d == 0.0) throw std::domain_error("w_chain_step: d is zero");
  const double shifted = k.c + k.d * s.location();
  const double da = k.d * s.scale();
  const double den = shifted * shifted + da * da;
  if (den == 0.0) throw std::domain_error("w_chain_step: zero denominator");
  return {std::abs(da) / den, shifted / den};
}

ArcsineChainCoeffs u_chain_coeffs(unsigned n) {
  if (n == 0) throw std::invalid_argument("u_chain_coeffs: n must be >= 1");
  ArcsineChainCoeffs c{1, 0, 1};
  while (c.n < n) {
    BigInt next_beta = c.alpha + c.beta;
    c.alpha = std::move(c.beta);
    c.beta = std::move(next_beta);
    ++c.n;
  }
  return c;
}

Support u_chain_support(unsigned n) {
  const auto c = u_chain_coeffs(n);
  BigRational inner(c.beta, c.alpha + c.beta);
  BigRational outer(c.alpha + c.beta, c.alpha + 2 * c.beta);
  if (n % 2 == 0) return {std::move(outer), std::move(inner)};
  return {std::move(inner), std::move(outer)};
}

UChainLaw::UChainLaw(unsigned n) : n_(n) {
  const auto c = u_chain_coeffs(n);
  if (c.alpha + 2 * c.beta > BigInt(static_cast<unsigned long>(1UL << 53))) {
    throw std::domain_error("UChainLaw: coefficients exceed 2^53");
  }
  alpha_ = c.alpha.get_d();
  beta_ = c.beta.get_d();
  sign_ = n % 2 == 0 ? 1.0 : -1.0;
  const Support s = u_chain_support(n);
  lo_ = s.lo.to_double();
  hi_ = s.hi.to_double();
  width_ = (s.hi - s.lo).to_double();
}

double UChainLaw::density(double u) const {
  if (!std::isfinite(u)) throw std::domain_error("UChainLaw: non-finite u");
  // With integer coefficients below 2^53 each fma rounds once, so the sign of
  // every factor is exact: u is strictly inside the support iff the two
  // square-root arguments are positive.
  const double lower = sign_ * std::fma(-(alpha_ + beta_), u, beta_);
  const double upper =
      sign_ * std::fma(alpha_ + 2 * beta_, u, -(alpha_ + beta_));
  if (!(lower > 0.0 && upper > 0.0)) {
    throw std::domain_error("u_chain_density: u outside the open support");
  }
  const double linear = sign_ * std::fma(beta_, u, -alpha_);
  return 1.0 / (pi * linear * std::sqrt(lower) * std::sqrt(upper));
}

double UChainLaw::density_local(double t) const {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("u_chain_density: local coordinate outside (0, 1)");
  }
  // lower * upper = (alpha + beta)(alpha + 2 beta) |u - lo| |u - hi|
  //               = width t (1 - t).
  const double u = lo_ + width_ * t;
  const double linear = sign_ * std::fma(beta_, u, -alpha_);
  return 1.0 / (pi * linear * std::sqrt(width_ * t * (1.0 - t)));
}

double u_chain_density(unsigned n, double u) {
  return UChainLaw(n).density(u);
}

double scaled_arcsine_density(double t, double s) {
  if (!(t > 0.0)) throw std::invalid_argument("scaled_arcsine: t must be > 0");
  if (!(s > 0.0 && s < t)) {
    throw std::domain_error("scaled_arcsine_density: s outside (0, t)");
  }
  return 1.0 / (pi * std::sqrt(s * (t - s)));
}

double scaled_arcsine_cdf(double t, double s) {
  if (!(t > 0.0)) throw std::invalid_argument("scaled_arcsine: t must be > 0");
  if (s <= 0.0) return 0.0;
  if (s >= t) return 1.0;
  return 2.0 / pi * std::asin(std::sqrt(s / t));
}

SampleSet sample_v_chain(unsigned n, RngSeed seed, std::size_t m) {
  if (n == 0) throw std::invalid_argument("sample_v_chain: n must be >= 1");
  if (m == 0) throw std::invalid_argument("sample_v_chain: m must be >= 1");
  Rng rng(seed);
  const auto standard = CauchyParams::standard();
  SampleSet out;
  out.values.reserve(m);
  while (out.values.size() < m) {
    double v = quantile(standard, rng.uniform_open());
    bool pole = false;
    for (unsigned k = 0; k < n && !pole; ++k) {
      const double den = 1.0 + v;
      pole = den == 0.0;
      if (!pole) v = 1.0 / den;
    }
    if (pole || !std::isfinite(v)) {
      ++out.pole_discards;
      continue;
    }
    out.values.push_back(v);
  }
  return out;
}

SampleSet sample_w_chain(const CauchyParams& start,
                         std::span<const ChainStepCoeffs> steps, RngSeed seed,
                         std::size_t m) {
  if (steps.empty()) throw std::invalid_argument("sample_w_chain: no steps");
  if (m == 0) throw std::invalid_argument("sample_w_chain: m must be >= 1");
  Rng rng(seed);
  SampleSet out;
  out.values.reserve(m);
  while (out.values.size() < m) {
    double w = quantile(start, rng.uniform_open());
    bool pole = false;
    for (const auto& k : steps) {
      const double den = k.c + k.d * w;
      pole = den == 0.0;
      if (pole) break;
      w = 1.0 / den;
    }
    if (pole || !std::isfinite(w)) {
      ++out.pole_discards;
      continue;
    }
    out.values.push_back(w);
  }
  return out;
}

std::vector<double> sample_u_chain(unsigned n, RngSeed seed, std::size_t m) {
  if (n == 0) throw std::invalid_argument("sample_u_chain: n must be >= 1");
  if (m == 0) throw std::invalid_argument("sample_u_chain: m must be >= 1");
  // U_n = (p + q x) / (r + s x) with x = U_1; one more level maps
  // (p, q, r, s) -> (r, s, r + p, s + q).
  double p = 0, q = 1, r = 1, s = 0;
  for (unsigned k = 1; k < n; ++k) {
    const double np = r, nq = s, nr = r + p, ns = s + q;
    p = np, q = nq, r = nr, s = ns;
  }
  Rng rng(seed);
  const auto standard = CauchyParams::standard();
  std::vector<double> out(m);
  for (auto& u : out) {
    const double c = quantile(standard, rng.uniform_open());
    const double x = 1.0 / (1.0 + c * c);
    u = (p + q * x) / (r + s * x);
  }
  return out;
}

double golden_gap(unsigned n) {
  const RationalPair v = v_chain_params(n);
  const mp_bitcnt_t bits = 128 + 12 * static_cast<mp_bitcnt_t>(n);
  mpf_class root5(5, bits);
  root5 = sqrt(root5);
  mpf_class golden_minus_one((root5 - 1) / 2, bits);
  mpf_class b(v.location.raw(), bits);
  mpf_class gap(abs(b - golden_minus_one), bits);
  return gap.get_d();
}

}  // namespace cauchy_angles
