#include <cmath>
#include <numbers>
#include <vector>

#include "cauchy_angles/continued_fraction.hpp"
#include "cauchy_angles/stats.hpp"
#include "doctest.h"

using namespace cauchy_angles;
using doctest::Approx;
using std::numbers::phi;
using std::numbers::pi;

namespace {

BigRational q(long p, long r) { return BigRational(BigInt(p), BigInt(r)); }

// Closed-form CDF of 1 / (1 + X) with X arcsine on (0, 1).
double u2_cdf(double u) {
  const double x = 1.0 / u - 1.0;
  return 1.0 - 2.0 / pi * std::asin(std::sqrt(std::clamp(x, 0.0, 1.0)));
}

}  // namespace

TEST_CASE("BigRational") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(-3, 6).str() == "-1/2");
  CHECK(q(3, -6) == q(-1, 2));
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(1, 3) - q(1, 2) == q(-1, 6));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK(q(2, 3) / q(4, 9) == q(3, 2));
  CHECK(-q(1, 2) == q(-1, 2));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(0, 5).sign() == 0);
  CHECK(q(-1, 5).sign() == -1);
  CHECK_THROWS(q(1, 0));
  CHECK_THROWS(q(1, 2) / BigRational(0));
  CHECK(BigRational::from_double(0.1).to_double() == 0.1);
  CHECK(BigRational::from_double(0.75) == q(3, 4));
  CHECK(BigRational::from_double(-2.0) == BigRational(-2));
  CHECK_THROWS(BigRational::from_double(NAN));
}

TEST_CASE("Fibonacci numbers") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(21) == 10946);
  CHECK(fibonacci(90) == BigInt("2880067194370816120"));
  CHECK(fibonacci(201) ==
        BigInt("453973694165307953197296969697410619233826"));
  const double sqrt5 = std::sqrt(5.0);
  for (unsigned k = 2; k <= 70; ++k) {
    const double binet = std::round(std::pow(phi, k) / sqrt5);
    CHECK(std::abs(binet - fibonacci(k).get_d()) / binet < 1e-13);
  }
}

TEST_CASE("V chain closed form") {
  const auto v1 = v_chain_params(1);
  CHECK(v1.scale == q(1, 2));
  CHECK(v1.location == q(1, 2));
  const auto v2 = v_chain_params(2);
  CHECK(v2.scale == q(1, 5));
  CHECK(v2.location == q(3, 5));
  CHECK(v_chain_params(3).scale == q(1, 13));
  CHECK(v_chain_params(3).location == q(8, 13));
  CHECK(v_chain_params(10).scale == q(1, 10946));
  CHECK(v_chain_params(10).location == q(6765, 10946));
  CHECK_THROWS(v_chain_params(0));

  const auto v100 = v_chain_params(100);
  CHECK(v100.scale == BigRational(BigInt(1), fibonacci(201)));
  CHECK(v100.scale.to_double() == Approx(2.2027708055609592e-42).epsilon(1e-15));
  CHECK(v_chain_params(99).scale.to_double() ==
        Approx(5.7670e-42).epsilon(1e-4));
}

TEST_CASE("V chain recursion agrees with the closed form") {
  RationalPair s{BigRational(1), BigRational(0), 0};
  for (unsigned n = 1; n <= 120; ++n) {
    s = v_chain_step(s);
    const auto closed = v_chain_params(n);
    REQUIRE(s.scale == closed.scale);
    REQUIRE(s.location == closed.location);
    CHECK(s.n == n);
  }
}

TEST_CASE("W chain step") {
  const RationalPair start{BigRational(1), BigRational(0), 0};
  const auto one = w_chain_step(start, {BigRational(2), BigRational(1)});
  CHECK(one.scale == q(1, 5));
  CHECK(one.location == q(2, 5));
  CHECK(one.n == 1);

  const auto neg = w_chain_step(start, {BigRational(2), BigRational(-1)});
  CHECK(neg.scale == q(1, 5));
  CHECK(neg.location == q(2, 5));

  const auto unit = w_chain_step(start, {BigRational(1), BigRational(1)});
  CHECK(unit == v_chain_params(1));

  CHECK_THROWS_AS(w_chain_step(start, {BigRational(1), BigRational(0)}),
                  std::domain_error);

  const auto d = w_chain_step(CauchyParams(1, 0), ChainStepCoeffs{2, 1});
  CHECK(d.scale() == Approx(0.2).epsilon(1e-15));
  CHECK(d.location() == Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(w_chain_step(CauchyParams(1, 0), ChainStepCoeffs{1, 0}),
                  std::domain_error);
}

TEST_CASE("W chain samples follow the exact law") {
  const std::vector<ChainStepCoeffs> steps{{2, 1}, {-1, 3}, {0.5, -2}};
  const auto s = sample_w_chain({1, 0}, steps, {77, 0}, 200000);
  RationalPair exact{BigRational(1), BigRational(0), 0};
  exact = w_chain_step(exact, {BigRational(2), BigRational(1)});
  exact = w_chain_step(exact, {BigRational(-1), BigRational(3)});
  exact = w_chain_step(exact, {BigRational::from_double(0.5), BigRational(-2)});
  CHECK(ks_test(s.values, exact.to_params(), 0.01, s.pole_discards).passed);
}

TEST_CASE("V chain samples follow the exact law") {
  for (unsigned n : {1u, 2u, 5u}) {
    const auto s = sample_v_chain(n, {21, n}, 200000);
    CHECK(ks_test(s.values, v_chain_params(n).to_params(), 0.01,
                  s.pole_discards)
              .passed);
  }
}

TEST_CASE("one plus V_20 concentrates at phi") {
  const auto s = sample_v_chain(20, {22, 0}, 100000);
  std::vector<double> shifted;
  for (double v : s.values) shifted.push_back(1.0 + v);
  const double probs[] = {0.5};
  CHECK(std::abs(quantile_table(shifted, probs)[0] - phi) < 0.01);
}

TEST_CASE("golden gap") {
  double previous = 1.0;
  for (unsigned n = 1; n <= 40; ++n) {
    const double gap = golden_gap(n);
    CHECK(gap > 0.0);
    CHECK(gap < previous);
    CHECK(gap < std::pow(phi, -4.0 * n + 2.0));
    previous = gap;
  }
  CHECK(golden_gap(16) < 1e-12);
  CHECK(golden_gap(1) == Approx(std::abs(0.5 - (phi - 1))).epsilon(1e-12));
}

TEST_CASE("U chain coefficients and support") {
  const auto c1 = u_chain_coeffs(1);
  CHECK(c1.alpha == 1);
  CHECK(c1.beta == 0);
  const auto c2 = u_chain_coeffs(2);
  CHECK(c2.alpha == 0);
  CHECK(c2.beta == 1);
  const auto c6 = u_chain_coeffs(6);
  CHECK(c6.alpha == 3);
  CHECK(c6.beta == 5);
  CHECK_THROWS(u_chain_coeffs(0));

  CHECK(u_chain_support(1).lo == BigRational(0));
  CHECK(u_chain_support(1).hi == BigRational(1));
  CHECK(u_chain_support(2).lo == q(1, 2));
  CHECK(u_chain_support(2).hi == BigRational(1));
  CHECK(u_chain_support(3).lo == q(1, 2));
  CHECK(u_chain_support(3).hi == q(2, 3));
  CHECK(u_chain_support(4).lo == q(3, 5));
  CHECK(u_chain_support(4).hi == q(2, 3));

  for (unsigned n = 2; n <= 40; ++n) {
    const auto s = u_chain_support(n);
    const auto prev = u_chain_support(n - 1);
    CHECK(s.lo < s.hi);
    CHECK(prev.lo <= s.lo);
    CHECK(s.hi <= prev.hi);
  }
}

TEST_CASE("U chain density") {
  CHECK(u_chain_density(1, 0.5) == Approx(2 / pi).epsilon(1e-15));
  for (double u : {0.55, 0.7, 0.9}) {
    const double want =
        1.0 / (pi * u * std::sqrt((1.0 - u) * (2.0 * u - 1.0)));
    CHECK(u_chain_density(2, u) == Approx(want).epsilon(1e-14));
  }
  {
    const double u = 0.63;
    const double want =
        1.0 / (pi * (2 * u - 1) * std::sqrt((2 - 3 * u) * (5 * u - 3)));
    CHECK(u_chain_density(4, u) == Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(u_chain_density(2, 0.5), std::domain_error);
  CHECK_THROWS_AS(u_chain_density(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(u_chain_density(3, 0.4), std::domain_error);
  CHECK_THROWS_AS(UChainLaw(80), std::domain_error);

  SUBCASE("local coordinate agrees with the direct form") {
    const UChainLaw law(4);
    CHECK(law.width() == Approx(2.0 / 3 - 3.0 / 5).epsilon(1e-15));
    for (double t : {0.1, 0.5, 0.9}) {
      const double u = law.lo() + law.width() * t;
      CHECK(law.density_local(t) == Approx(law.density(u)).epsilon(1e-10));
    }
  }

  SUBCASE("unit mass") {
    for (unsigned n = 1; n <= 14; ++n) {
      const UChainLaw law(n);
      const auto r = integrate_singular(
          [&](double t) { return law.width() * law.density_local(t); }, 0, 1);
      CHECK(r.converged);
      CHECK(std::abs(r.value - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("scaled arcsine law") {
  CHECK(scaled_arcsine_density(1.0, 0.5) == Approx(2 / pi).epsilon(1e-15));
  CHECK(scaled_arcsine_density(2.0, 1.0) == Approx(1 / pi).epsilon(1e-15));
  CHECK(scaled_arcsine_cdf(2.0, 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(scaled_arcsine_cdf(1.0, 0.25) == Approx(1.0 / 3).epsilon(1e-14));
  CHECK(scaled_arcsine_cdf(1.0, 0.0) == 0.0);
  CHECK(scaled_arcsine_cdf(1.0, 1.0) == 1.0);
  const auto r = integrate_singular(
      [](double s) { return scaled_arcsine_density(3.0, s); }, 0.0, 3.0);
  CHECK(r.value == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("U chain samples") {
  const auto u1 = sample_u_chain(1, {31, 1}, 200000);
  CHECK(ks_test(u1, [](double s) { return scaled_arcsine_cdf(1.0, s); }, 0.01)
            .passed);
  const auto u2 = sample_u_chain(2, {31, 2}, 200000);
  CHECK(ks_test(u2, u2_cdf, 0.01).passed);
  for (double u : u2) {
    REQUIRE(u > 0.5);
    REQUIRE(u < 1.0);
  }
  CHECK(sample_u_chain(3, {31, 3}, 1000) == sample_u_chain(3, {31, 3}, 1000));
}
