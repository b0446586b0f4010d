#include "cauchy_angles/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <numbers>

#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/continued_fraction.hpp"
#include "cauchy_angles/stats.hpp"
#include "cauchy_angles/transform.hpp"
#include "cauchy_angles/walk.hpp"

namespace cauchy_angles {

namespace {

using std::numbers::pi;

constexpr double kAlpha = 0.01;
const double kGoldenMinusOne = (std::sqrt(5.0) - 1.0) / 2.0;

std::string pair_str(const RationalPair& p) {
  return "(" + p.scale.str() + ", " + p.location.str() + ")";
}

bool same(const RationalPair& p, long a_num, long a_den, long b_num,
          long b_den) {
  return p.scale == BigRational(a_num, a_den) &&
         p.location == BigRational(b_num, b_den);
}

CriterionResult table_reproduction() {
  CriterionResult r{1, "V-chain parameter table", {}};
  const auto v1 = v_chain_params(1), v2 = v_chain_params(2),
             v3 = v_chain_params(3);
  r.checks.push_back(boolean_verdict("n1_exact " + pair_str(v1),
                                     same(v1, 1, 2, 1, 2)));
  r.checks.push_back(boolean_verdict("n2_exact " + pair_str(v2),
                                     same(v2, 1, 5, 3, 5)));
  r.checks.push_back(boolean_verdict("n3_exact " + pair_str(v3),
                                     same(v3, 1, 13, 8, 13)));
  const auto v100 = v_chain_params(100);
  r.checks.push_back(tolerance_verdict(
      "b100_vs_0.618034", std::abs(v100.location.to_double() - 0.618034),
      5e-7));
  r.checks.push_back(tolerance_verdict(
      "a100_vs_5.77e-42_relative",
      std::abs(v100.scale.to_double() / 5.77e-42 - 1.0), 1e-2));
  return r;
}

CriterionResult closed_form_vs_recursion() {
  CriterionResult r{2, "Fibonacci closed form equals recursion", {}};
  RationalPair iterated{BigRational(1, 2), BigRational(1, 2), 1};
  bool equal = true, b_increasing = true, a_decreasing = true;
  RationalPair previous = iterated;
  for (unsigned n = 1; n <= 200; ++n) {
    if (n > 1) iterated = v_chain_step(iterated);
    const RationalPair closed = v_chain_params(n);
    equal = equal && closed == iterated;
    if (n > 1) {
      b_increasing = b_increasing && previous.location < closed.location;
      a_decreasing = a_decreasing && closed.scale < previous.scale;
    }
    previous = closed;
  }
  r.checks.push_back(boolean_verdict("closed_equals_iterated_n1_200", equal));
  r.checks.push_back(boolean_verdict("b_strictly_increasing", b_increasing));
  r.checks.push_back(boolean_verdict("a_strictly_decreasing", a_decreasing));
  return r;
}

CriterionResult golden_convergence() {
  CriterionResult r{3, "golden-ratio convergence", {}};
  double worst = 0.0;
  for (unsigned n = 16; n <= 200; ++n) worst = std::max(worst, golden_gap(n));
  r.checks.push_back(tolerance_verdict("b_gap_n16_200", worst, 1e-12));

  const Support s20 = u_chain_support(20);
  r.checks.push_back(tolerance_verdict(
      "support20_lo", std::abs(s20.lo.to_double() - kGoldenMinusOne), 1e-6));
  r.checks.push_back(tolerance_verdict(
      "support20_hi", std::abs(s20.hi.to_double() - kGoldenMinusOne), 1e-6));

  bool lengths = true;
  for (unsigned n = 1; n <= 200; ++n) {
    const auto c = u_chain_coeffs(n);
    const Support s = u_chain_support(n);
    lengths = lengths && s.hi - s.lo == BigRational(1, (c.alpha + c.beta) *
                                                           (c.alpha + 2 * c.beta));
  }
  r.checks.push_back(boolean_verdict("support_length_exact_n1_200", lengths));
  return r;
}

CriterionResult centered_law(RngSeed seed) {
  CriterionResult r{4, "centered Mobius transform law", {}};
  const std::array<MobiusCoeffs, 3> sets{MobiusCoeffs(1, 1, 1, 1),
                                         MobiusCoeffs(2, 0, 3, 1),
                                         MobiusCoeffs(1, 2, 2, 5)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& m = sets[i];
    const SampleSet s = sample_general(m, seed.substream(i), 1000000);
    const CauchyParams law = centered_params(m);
    auto v = ks_test(s.values, law, kAlpha, s.pole_discards);
    r.checks.push_back({"ks_(" + format_real(m.alpha()) + "," +
                            format_real(m.beta()) + "," +
                            format_real(m.gamma()) + "," +
                            format_real(m.delta()) + ")",
                        v});
  }
  return r;
}

CriterionResult noncentered_law(RngSeed seed) {
  CriterionResult r{5, "non-centered tangent-addition law", {}};
  const CauchyParams unit_shifted(1.0, 1.0);
  const CauchyParams closed = noncentered_params(unit_shifted, unit_shifted);
  r.checks.push_back(
      boolean_verdict("b1_scale_exact_6/5", closed.scale() == 6.0 / 5.0));
  r.checks.push_back(boolean_verdict(
      "b1_location_exact_2/5 (observed " + format_real(closed.location()) + ")",
      closed.location() == 2.0 / 5.0));

  Rng pick(seed.substream(0));
  for (std::size_t i = 0; i < 20; ++i) {
    const CauchyParams p1(0.2 + 4.8 * pick.uniform_open(),
                          -3.0 + 6.0 * pick.uniform_open());
    const CauchyParams p2(0.2 + 4.8 * pick.uniform_open(),
                          -3.0 + 6.0 * pick.uniform_open());
    const SampleSet s =
        sample_transform(TransformKind::U, seed.substream(i + 1), 100000, p1, p2);
    r.checks.push_back({"ks_random_pair_" + std::to_string(i),
                        ks_test(s.values, noncentered_params(p1, p2), kAlpha,
                                s.pole_discards)});
  }

  bool reduces = true;
  const std::array<std::pair<double, double>, 4> scales{
      {{2.0, 3.0}, {0.5, 4.0}, {0.2, 5.0}, {1.0, 1.0}}};
  for (const auto& [a1, a2] : scales) {
    const CauchyParams u = noncentered_params({a1, 0.0}, {a2, 0.0});
    reduces = reduces && u.scale() == (a1 + a2) / (1.0 + a1 * a2) &&
              u.location() == 0.0;
  }
  r.checks.push_back(boolean_verdict("zero_location_reduction_exact", reduces));
  return r;
}

CriterionResult z_identities(RngSeed seed) {
  CriterionResult r{6, "Z1, Z2, Z3 are standard Cauchy", {}};
  const std::array kinds{TransformKind::Z1, TransformKind::Z2,
                         TransformKind::Z3};
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const SampleSet s = sample_transform(kinds[i], seed.substream(i), 1000000);
    r.checks.push_back({std::string("ks_") + to_string(kinds[i]),
                        ks_test(s.values, CauchyParams::standard(), kAlpha,
                                s.pole_discards)});
  }
  return r;
}

CriterionResult walk_closure(RngSeed seed) {
  CriterionResult r{7, "angular walk closure", {}};
  for (std::size_t n : {1, 2, 3, 5, 10}) {
    const std::vector<EuclideanStepSpec> steps(n, EuclideanStepSpec{});
    const auto tangents =
        euclidean_walk_tangents(steps, seed.substream(n), 100000);
    r.checks.push_back({"ks_tanS_n" + std::to_string(n),
                        ks_test(tangents, CauchyParams::standard(), kAlpha)});
  }
  const std::vector<EuclideanStepSpec> scaled{{1.0, 2.0, 0.0},
                                              {1.0, 3.0, 0.0}};
  const auto tangents = euclidean_walk_tangents(scaled, seed.substream(0), 100000);
  r.checks.push_back({"ks_two_step_scales_2_3",
                      ks_test(tangents, CauchyParams(5.0 / 7.0, 0.0), kAlpha)});
  return r;
}

CriterionResult hyperbolic_geometry(RngSeed seed) {
  CriterionResult r{8, "hyperbolic triangle geometry", {}};
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const HyperbolicStep h{std::exp(-3.0 + 6.0 * rng.uniform_open()),
                           std::exp(-3.0 + 6.0 * rng.uniform_open())};
    worst = std::max(worst, std::abs(hyperbolic_triangle_area(h) -
                                     hyperbolic_angle_defect(h)));
  }
  r.checks.push_back(tolerance_verdict("area_identity_max_error", worst, 1e-12));

  bool capped = true;
  for (int i = 0; i < 10000; ++i) {
    const double eta = std::exp(-3.0 + 6.0 * rng.uniform_open());
    capped = capped && std::abs(hyperbolic_angle({eta, eta}).theta) <= pi / 4;
  }
  r.checks.push_back(boolean_verdict("isosceles_angle_le_pi/4", capped));
  return r;
}

CriterionResult u_chain_densities(RngSeed seed) {
  CriterionResult r{9, "U_n densities", {}};
  double worst_mass = 0.0;
  for (unsigned n = 1; n <= 12; ++n) {
    const UChainLaw law(n);
    const auto q = integrate_singular(
        [&](double t) { return law.width() * law.density_local(t); }, 0.0, 1.0);
    worst_mass = std::max(worst_mass, std::abs(q.value - 1.0));
  }
  r.checks.push_back(tolerance_verdict("mass_n1_12", worst_mass, 1e-6));

  using Form = double (*)(double);
  const std::array<Form, 4> printed{
      [](double u) { return 1.0 / (pi * std::sqrt(u * (1 - u))); },
      [](double u) { return 1.0 / (pi * u * std::sqrt((1 - u) * (2 * u - 1))); },
      [](double u) {
        return 1.0 / (pi * (1 - u) * std::sqrt((2 * u - 1) * (2 - 3 * u)));
      },
      [](double u) {
        return 1.0 / (pi * (2 * u - 1) * std::sqrt((2 - 3 * u) * (5 * u - 3)));
      }};
  double worst_rel = 0.0;
  for (unsigned n = 1; n <= 4; ++n) {
    const UChainLaw law(n);
    for (int k = 0; k < 100; ++k) {
      const double u = law.lo() + (law.hi() - law.lo()) * (k + 0.5) / 100.0;
      const double want = printed[n - 1](u);
      worst_rel = std::max(worst_rel, std::abs(law.density(u) - want) / want);
    }
  }
  r.checks.push_back(
      tolerance_verdict("printed_forms_relative_n1_4", worst_rel, 1e-12));

  const auto samples = sample_u_chain(4, seed, 100000);
  const BigRational lo(3, 5), hi(2, 3);
  const auto outside = std::count_if(samples.begin(), samples.end(), [&](double u) {
    const auto x = BigRational::from_double(u);
    return !(lo < x && x < hi);
  });
  r.checks.push_back(boolean_verdict(
      "u4_samples_inside_(3/5,2/3) outside=" + std::to_string(outside),
      outside == 0));
  return r;
}

CriterionResult characteristic_function(RngSeed seed) {
  CriterionResult r{10, "uniform-angle characteristic function", {}};
  constexpr std::size_t m = 1000000;
  const auto w = uniform_angle_tangent(seed, m);
  std::vector<double> grid;
  for (int t = -5; t <= 5; ++t) grid.push_back(t);
  r.checks.push_back(tolerance_verdict(
      "ecf_distance_t-5_5", ecf_distance(w, CauchyParams::standard(), grid),
      3.0 / std::sqrt(static_cast<double>(m))));
  return r;
}

}  // namespace

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Verdict& v) { return v.result.passed; });
}

CriterionResult run_criterion(int id, RngSeed seed) {
  const RngSeed s = seed.substream(static_cast<std::uint64_t>(id));
  switch (id) {
    case 1: return table_reproduction();
    case 2: return closed_form_vs_recursion();
    case 3: return golden_convergence();
    case 4: return centered_law(s);
    case 5: return noncentered_law(s);
    case 6: return z_identities(s);
    case 7: return walk_closure(s);
    case 8: return hyperbolic_geometry(s);
    case 9: return u_chain_densities(s);
    case 10: return characteristic_function(s);
    default: throw std::out_of_range("run_criterion: id must be in 1..10");
  }
}

ExperimentReport verify_all(RngSeed seed) {
  ExperimentReport report{"verify-all", seed, {}, {}};
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult c = run_criterion(id, seed);
    report.rows.push_back(
        {"criterion " + c.title, static_cast<double>(id),
         c.passed() ? "pass" : "fail"});
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "c%02d.", id);
    for (auto& v : c.checks) {
      v.name = prefix + v.name;
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace cauchy_angles
