#include "cauchy_angles/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchy_angles {

namespace {

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  const double r = num / den;
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

template <class Map>
SampleSet sample_pairs(Map map, RngSeed seed, std::size_t n,
                       const CauchyParams& p1, const CauchyParams& p2) {
  if (n == 0) throw std::invalid_argument("sample: n must be positive");
  Rng rng(seed);
  SampleSet out;
  out.values.reserve(n);
  while (out.values.size() < n) {
    const double c1 = quantile(p1, rng.uniform_open());
    const double c2 = quantile(p2, rng.uniform_open());
    if (const auto v = map(c1, c2)) {
      out.values.push_back(*v);
    } else {
      ++out.pole_discards;
    }
  }
  return out;
}

}  // namespace

MobiusCoeffs::MobiusCoeffs(double alpha, double beta, double gamma,
                           double delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
      !std::isfinite(delta)) {
    throw std::invalid_argument("MobiusCoeffs: non-finite coefficient");
  }
  if (beta < 0.0 || gamma < 0.0 || delta < 0.0) {
    throw std::invalid_argument(
        "MobiusCoeffs: beta, gamma, delta must be nonnegative");
  }
  if (gamma == 0.0 && delta == 0.0) {
    throw std::invalid_argument("MobiusCoeffs: gamma and delta both zero");
  }
  if (alpha + beta == 0.0) {
    throw std::invalid_argument("MobiusCoeffs: alpha + beta must be nonzero");
  }
}

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::U: return "U";
    case TransformKind::Z1: return "Z1";
    case TransformKind::Z2: return "Z2";
    case TransformKind::Z3: return "Z3";
  }
  return "?";
}

CauchyParams centered_params(const MobiusCoeffs& m) {
  return {std::abs((m.gamma() + m.delta()) / (m.alpha() + m.beta())), 0.0};
}

CauchyParams scaled_centered_params(const MobiusCoeffs& m, double a1,
                                    double a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) {
    throw std::invalid_argument("scaled_centered_params: scales must be > 0");
  }
  const double den = m.alpha() + m.beta() * a1 * a2;
  if (den == 0.0) {
    throw std::domain_error(
        "scaled_centered_params: alpha + beta a1 a2 is zero");
  }
  return {std::abs((m.gamma() * a1 + m.delta() * a2) / den), 0.0};
}

CauchyParams noncentered_params(const CauchyParams& p1,
                                const CauchyParams& p2) {
  const double a1 = p1.scale(), b1 = p1.location();
  const double a2 = p2.scale(), b2 = p2.location();
  const double P = 1.0 + a1 * a2 - b1 * b2;
  const double Q = a1 * b2 + a2 * b1;
  if (P == 0.0 && Q == 0.0) {
    throw std::domain_error("noncentered_params: degenerate composite");
  }
  // (b + i a) of the result is (z1 + z2) / (P - i Q), divided with Smith's
  // scaling. For Q == 0 this reduces to (a1 + a2) / (1 + a1 a2) bit for bit.
  const double sum_a = a1 + a2, sum_b = b1 + b2;
  double scale, location;
  if (std::abs(Q) <= std::abs(P)) {
    const double r = Q / P, t = P + Q * r;
    scale = (sum_a + sum_b * r) / t;
    location = (sum_b - sum_a * r) / t;
  } else {
    const double r = P / Q, t = P * r + Q;
    scale = (sum_a * r + sum_b) / t;
    location = (sum_b * r - sum_a) / t;
  }
  return {std::abs(scale), location};
}

CauchyParams arctan_sum_params(std::span<const CauchyParams> ps) {
  if (ps.empty()) {
    throw std::invalid_argument("arctan_sum_params: empty sequence");
  }
  CauchyParams acc = ps.front();
  for (const auto& p : ps.subspan(1)) acc = noncentered_params(acc, p);
  return acc;
}

std::optional<double> eval_transform(TransformKind kind, double c1,
                                     double c2) {
  switch (kind) {
    case TransformKind::U: return ratio(c1 + c2, 1.0 - c1 * c2);
    case TransformKind::Z1: return ratio(c1 * c2 + 1.0, c1 - c2);
    case TransformKind::Z2: return ratio(1.0 - c1 * c2, c1 + c2);
    case TransformKind::Z3: return ratio(c1 + c2, c1 * c2 - 1.0);
  }
  return std::nullopt;
}

std::optional<double> eval_general(const MobiusCoeffs& m, double c1,
                                   double c2) {
  return ratio(m.gamma() * c1 + m.delta() * c2, m.alpha() - m.beta() * c1 * c2);
}

SampleSet sample_transform(TransformKind kind, RngSeed seed, std::size_t n,
                           const CauchyParams& p1, const CauchyParams& p2) {
  return sample_pairs(
      [kind](double c1, double c2) { return eval_transform(kind, c1, c2); },
      seed, n, p1, p2);
}

SampleSet sample_general(const MobiusCoeffs& m, RngSeed seed, std::size_t n,
                         const CauchyParams& p1, const CauchyParams& p2) {
  return sample_pairs(
      [&m](double c1, double c2) { return eval_general(m, c1, c2); }, seed, n,
      p1, p2);
}

}  // namespace cauchy_angles
