#include "cauchy_angles/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "cauchy_angles/acceptance.hpp"
#include "cauchy_angles/cauchy.hpp"
#include "cauchy_angles/continued_fraction.hpp"
#include "cauchy_angles/stats.hpp"
#include "cauchy_angles/transform.hpp"
#include "cauchy_angles/walk.hpp"

namespace cauchy_angles {

namespace {

using std::numbers::pi;

const std::set<std::string> kExperiments{"transform-verify", "chain", "walk",
                                         "golden", "verify-all"};

// U_n densities and sampler checks are only meaningful while the support is
// wide enough to resolve in double precision.
constexpr unsigned kMaxDensityDepth = 12;
// V/W chain Monte Carlo checks are run only for shallow chains, where the
// scale is still far above the rounding level of the location.
constexpr unsigned kMaxSampledDepth = 10;

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw UsageError("invalid value for " + key + ": '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& key, const std::string& text) {
  // from_chars for double is missing from older libstdc++; strtod with a full
  // consumption check instead.
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw UsageError("invalid value for " + key + ": '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError("invalid boolean for " + key + ": '" + text + "'");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<EuclideanStepSpec> parse_steps(const ExperimentConfig& config) {
  std::vector<EuclideanStepSpec> steps;
  if (config.steps.empty()) {
    steps.assign(config.walk_length, EuclideanStepSpec{});
    return steps;
  }
  std::stringstream list(config.steps);
  std::string item;
  while (std::getline(list, item, ',')) {
    std::stringstream fields(item);
    std::string d, a, b;
    if (!std::getline(fields, d, ':') || !std::getline(fields, a, ':') ||
        !std::getline(fields, b)) {
      throw UsageError("step spec must be d:a:b, got '" + item + "'");
    }
    EuclideanStepSpec s{parse_real("steps.d", trim(d)),
                        parse_real("steps.a", trim(a)),
                        parse_real("steps.b", trim(b))};
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    steps.push_back(s);
  }
  if (steps.empty()) throw UsageError("empty step spec");
  return steps;
}

void add_quartile_rows(ExperimentReport& report, const std::string& label,
                       std::span<const double> samples) {
  constexpr std::array probs{0.25, 0.5, 0.75};
  const auto q = quantile_table(samples, probs);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    report.rows.push_back({label, probs[i], format_real(q[i])});
  }
}

// --- transform-verify ------------------------------------------------------

void transform_centered(const ExperimentConfig& cfg, ExperimentReport& report) {
  const std::array kinds{TransformKind::U, TransformKind::Z1,
                         TransformKind::Z2, TransformKind::Z3};
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const SampleSet s =
        sample_transform(kinds[i], cfg.seed.substream(i), cfg.sample_count);
    const std::string name = to_string(kinds[i]);
    add_quartile_rows(report, name + ".quantile", s.values);
    report.verdicts.push_back(
        {"ks_" + name + "_vs_standard",
         ks_test(s.values, CauchyParams::standard(), cfg.alpha,
                 s.pole_discards)});
  }
  const std::array<MobiusCoeffs, 3> sets{MobiusCoeffs(1, 1, 1, 1),
                                         MobiusCoeffs(2, 0, 3, 1),
                                         MobiusCoeffs(1, 2, 2, 5)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& m = sets[i];
    const CauchyParams law = centered_params(m);
    const std::string name = "general(" + format_real(m.alpha()) + "," +
                             format_real(m.beta()) + "," +
                             format_real(m.gamma()) + "," +
                             format_real(m.delta()) + ")";
    report.rows.push_back({name + ".scale", static_cast<double>(i),
                           format_real(law.scale())});
    const SampleSet s =
        sample_general(m, cfg.seed.substream(10 + i), cfg.sample_count);
    report.verdicts.push_back(
        {"ks_" + name, ks_test(s.values, law, cfg.alpha, s.pole_discards)});
  }
}

void transform_noncentered(const ExperimentConfig& cfg,
                           ExperimentReport& report) {
  Rng pick(cfg.seed.substream(0));
  for (std::size_t i = 0; i < 20; ++i) {
    const CauchyParams p1(0.2 + 4.8 * pick.uniform_open(),
                          -3.0 + 6.0 * pick.uniform_open());
    const CauchyParams p2(0.2 + 4.8 * pick.uniform_open(),
                          -3.0 + 6.0 * pick.uniform_open());
    const CauchyParams law = noncentered_params(p1, p2);
    const std::string name = "pair" + std::to_string(i);
    const double x = static_cast<double>(i);
    report.rows.push_back({name + ".a1", x, format_real(p1.scale())});
    report.rows.push_back({name + ".b1", x, format_real(p1.location())});
    report.rows.push_back({name + ".a2", x, format_real(p2.scale())});
    report.rows.push_back({name + ".b2", x, format_real(p2.location())});
    report.rows.push_back({name + ".a_U", x, format_real(law.scale())});
    report.rows.push_back({name + ".b_U", x, format_real(law.location())});
    const SampleSet s = sample_transform(
        TransformKind::U, cfg.seed.substream(i + 1), cfg.sample_count, p1, p2);
    report.verdicts.push_back(
        {"ks_" + name, ks_test(s.values, law, cfg.alpha, s.pole_discards)});
  }
}

void transform_scaled(const ExperimentConfig& cfg, ExperimentReport& report) {
  const std::array<std::pair<double, double>, 4> scales{
      {{2.0, 3.0}, {0.5, 4.0}, {0.2, 5.0}, {1.5, 1.5}}};
  std::vector<double> grid;
  for (int t = -5; t <= 5; ++t) grid.push_back(t);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const auto [a1, a2] = scales[i];
    const MobiusCoeffs unit(1, 1, 1, 1);
    const CauchyParams law = scaled_centered_params(unit, a1, a2);
    const std::string name =
        "scales(" + format_real(a1) + "," + format_real(a2) + ")";
    report.rows.push_back(
        {name + ".scale", static_cast<double>(i), format_real(law.scale())});

    // (C1 + C2) / (1 - C1 C2) with scaled inputs ...
    const SampleSet direct =
        sample_general(unit, cfg.seed.substream(2 * i), cfg.sample_count,
                       CauchyParams(a1, 0), CauchyParams(a2, 0));
    report.verdicts.push_back(
        {"ks_" + name, ks_test(direct.values, law, cfg.alpha,
                               direct.pole_discards)});
    // ... and (a1 C1 + a2 C2) / (1 - a1 a2 C1 C2) on standard inputs.
    const SampleSet folded = sample_general(MobiusCoeffs(1, a1 * a2, a1, a2),
                                            cfg.seed.substream(2 * i + 1),
                                            cfg.sample_count);
    const double n = static_cast<double>(folded.values.size());
    report.verdicts.push_back(tolerance_verdict(
        "ecf_" + name, ecf_distance(folded.values, law, grid),
        3.0 / std::sqrt(n)));
  }
}

// --- chain -----------------------------------------------------------------

void add_pair_rows(ExperimentReport& report, const RationalPair& p) {
  const double x = p.n;
  report.rows.push_back({"a_n", x, p.scale.str()});
  report.rows.push_back({"b_n", x, p.location.str()});
}

void add_cauchy_density_rows(ExperimentReport& report, const std::string& label,
                             const CauchyParams& law, std::size_t points) {
  constexpr double lo = -1.0, hi = 2.0;
  for (std::size_t k = 0; k < points; ++k) {
    const double x =
        lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    report.rows.push_back({label, x, format_real(density(law, x))});
  }
}

void chain_v(const ExperimentConfig& cfg, ExperimentReport& report) {
  RationalPair iterated{BigRational(1, 2), BigRational(1, 2), 1};
  bool equal = true;
  for (unsigned n = 1; n <= cfg.chain_depth; ++n) {
    if (n > 1) iterated = v_chain_step(iterated);
    const RationalPair closed = v_chain_params(n);
    equal = equal && closed == iterated;
    if (cfg.emit_params || !cfg.emit_density) add_pair_rows(report, closed);
    if (cfg.emit_density) {
      add_cauchy_density_rows(report, "V" + std::to_string(n),
                              closed.to_params(), cfg.points);
    }
  }
  report.verdicts.push_back(
      boolean_verdict("closed_form_equals_recursion", equal));
  for (unsigned n : {1u, 2u, 3u, 5u, 10u}) {
    if (n > cfg.chain_depth || n > kMaxSampledDepth) continue;
    const SampleSet s = sample_v_chain(n, cfg.seed.substream(n), cfg.sample_count);
    report.verdicts.push_back(
        {"ks_V" + std::to_string(n),
         ks_test(s.values, v_chain_params(n).to_params(), cfg.alpha,
                 s.pole_discards)});
  }
}

void chain_w(const ExperimentConfig& cfg, ExperimentReport& report) {
  const CauchyParams start(cfg.a0, cfg.b0);
  const ExactChainStepCoeffs exact{BigRational::from_double(cfg.c),
                                   BigRational::from_double(cfg.d)};
  RationalPair state{BigRational::from_double(cfg.a0),
                     BigRational::from_double(cfg.b0), 0};
  if (cfg.emit_params || !cfg.emit_density) add_pair_rows(report, state);
  for (unsigned n = 1; n <= cfg.chain_depth; ++n) {
    try {
      state = w_chain_step(state, exact);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    if (cfg.emit_params || !cfg.emit_density) add_pair_rows(report, state);
    if (cfg.emit_density) {
      add_cauchy_density_rows(report, "W" + std::to_string(n),
                              state.to_params(), cfg.points);
    }
  }
  if (cfg.chain_depth <= kMaxSampledDepth) {
    const std::vector<ChainStepCoeffs> steps(cfg.chain_depth,
                                             ChainStepCoeffs{cfg.c, cfg.d});
    const SampleSet s =
        sample_w_chain(start, steps, cfg.seed.substream(1), cfg.sample_count);
    report.verdicts.push_back(
        {"ks_W" + std::to_string(cfg.chain_depth),
         ks_test(s.values, state.to_params(), cfg.alpha, s.pole_discards)});
  }
}

void chain_u(const ExperimentConfig& cfg, ExperimentReport& report) {
  for (unsigned n = 1; n <= cfg.chain_depth; ++n) {
    const double x = n;
    if (cfg.emit_params || !cfg.emit_density) {
      const auto c = u_chain_coeffs(n);
      const Support s = u_chain_support(n);
      report.rows.push_back({"alpha_n", x, c.alpha.get_str()});
      report.rows.push_back({"beta_n", x, c.beta.get_str()});
      report.rows.push_back({"support_lo", x, s.lo.str()});
      report.rows.push_back({"support_hi", x, s.hi.str()});
    }
    if (n > kMaxDensityDepth) continue;
    const UChainLaw law(n);
    if (cfg.emit_density) {
      for (std::size_t k = 0; k < cfg.points; ++k) {
        const double t =
            (static_cast<double>(k) + 0.5) / static_cast<double>(cfg.points);
        report.rows.push_back({"U" + std::to_string(n),
                               law.lo() + law.width() * t,
                               format_real(law.density_local(t))});
      }
    }
    const auto q = integrate_singular(
        [&](double t) { return law.width() * law.density_local(t); }, 0.0, 1.0);
    report.verdicts.push_back(tolerance_verdict(
        "mass_U" + std::to_string(n), std::abs(q.value - 1.0), 1e-6));
  }
  // Sampler against the numerically integrated density.
  const unsigned n = std::min(cfg.chain_depth, 4u);
  const UChainLaw law(n);
  const auto samples = sample_u_chain(n, cfg.seed.substream(n), cfg.sample_count);
  const auto numeric_cdf = [&](double u) {
    const double t = (u - law.lo()) / law.width();
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return integrate_singular(
               [&](double s) { return law.width() * law.density_local(s); },
               0.0, t, 1 << 12, 1e-10)
        .value;
  };
  report.verdicts.push_back({"ks_U" + std::to_string(n) + "_vs_integrated_density",
                             ks_test(samples, numeric_cdf, cfg.alpha)});
}

// --- walk ------------------------------------------------------------------

void add_path_rows(ExperimentReport& report, const WalkPath& path) {
  for (std::size_t j = 0; j < path.angles.size(); ++j) {
    const double x = static_cast<double>(j + 1);
    report.rows.push_back({"theta", x, format_real(path.angles[j])});
    report.rows.push_back({"S", x, format_real(path.partial_sums[j])});
    report.rows.push_back({"tan_S", x, format_real(path.tangents[j])});
  }
}

void walk_euclid(const ExperimentConfig& cfg, ExperimentReport& report) {
  const auto steps = parse_steps(cfg);
  add_path_rows(report, euclidean_walk(steps, cfg.seed));
  std::vector<CauchyParams> laws;
  for (const auto& s : steps) laws.push_back(s.angle_tangent_law());
  const CauchyParams law = arctan_sum_params(laws);
  report.rows.push_back({"tan_S_law.scale", static_cast<double>(steps.size()),
                         format_real(law.scale())});
  report.rows.push_back({"tan_S_law.location",
                         static_cast<double>(steps.size()),
                         format_real(law.location())});
  const auto tangents =
      euclidean_walk_tangents(steps, cfg.seed, cfg.sample_count);
  report.verdicts.push_back({"ks_tan_S" + std::to_string(steps.size()),
                             ks_test(tangents, law, cfg.alpha)});
}

void walk_hyperbolic(const ExperimentConfig& cfg, ExperimentReport& report) {
  add_path_rows(report, hyperbolic_walk(cfg.walk_length, cfg.seed));
  const auto tangents =
      hyperbolic_walk_tangents(cfg.walk_length, cfg.seed, cfg.sample_count);
  report.verdicts.push_back({"ks_tan_S" + std::to_string(cfg.walk_length),
                             ks_test(tangents, CauchyParams::standard(),
                                     cfg.alpha)});
  // Isosceles triangles: angle and area as functions of the leg length.
  for (int k = 1; k <= 30; ++k) {
    const double eta = 0.1 * k;
    const HyperbolicStep h{eta, eta};
    report.rows.push_back(
        {"isosceles_theta", eta, format_real(hyperbolic_angle(h).theta)});
    report.rows.push_back(
        {"isosceles_area", eta, format_real(hyperbolic_triangle_area(h))});
  }
  Rng rng(cfg.seed.substream(1'000'000));
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const HyperbolicStep h{std::exp(-3.0 + 6.0 * rng.uniform_open()),
                           std::exp(-3.0 + 6.0 * rng.uniform_open())};
    worst = std::max(worst, std::abs(hyperbolic_triangle_area(h) -
                                     hyperbolic_angle_defect(h)));
  }
  report.verdicts.push_back(
      tolerance_verdict("area_identity_max_error", worst, 1e-12));
}

// --- golden ----------------------------------------------------------------

void golden(const ExperimentConfig& cfg, ExperimentReport& report) {
  const double target = (std::sqrt(5.0) - 1.0) / 2.0;
  double worst_tail = 0.0;
  bool monotone = true;
  BigRational previous_b;
  for (unsigned n = 1; n <= cfg.chain_depth; ++n) {
    const double x = n;
    const RationalPair v = v_chain_params(n);
    const Support s = u_chain_support(n);
    const double gap = golden_gap(n);
    report.rows.push_back({"b_gap", x, format_real(gap)});
    report.rows.push_back({"a_n", x, format_real(v.scale.to_double())});
    report.rows.push_back({"support_lo", x, format_real(s.lo.to_double())});
    report.rows.push_back({"support_hi", x, format_real(s.hi.to_double())});
    if (n >= 16) worst_tail = std::max(worst_tail, gap);
    if (n > 1) monotone = monotone && previous_b < v.location;
    previous_b = v.location;
  }
  report.verdicts.push_back(boolean_verdict("b_n_increasing", monotone));
  if (cfg.chain_depth >= 16) {
    report.verdicts.push_back(
        tolerance_verdict("b_gap_n_ge_16", worst_tail, 1e-12));
  }
  if (cfg.chain_depth >= 20) {
    const Support s = u_chain_support(20);
    const double err = std::max(std::abs(s.lo.to_double() - target),
                                std::abs(s.hi.to_double() - target));
    report.verdicts.push_back(tolerance_verdict("support20_gap", err, 1e-6));
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!kExperiments.contains(experiment)) {
    throw UsageError("unknown experiment '" + experiment + "'");
  }
  const auto require_mode = [&](std::initializer_list<const char*> modes) {
    for (const char* m : modes) {
      if (mode == m) return;
    }
    throw UsageError("unknown mode '" + mode + "' for " + experiment);
  };
  if (experiment == "transform-verify") {
    require_mode({"centered", "noncentered", "scaled"});
  } else if (experiment == "chain") {
    require_mode({"v", "w", "u"});
  } else if (experiment == "walk") {
    require_mode({"euclid", "hyperbolic"});
  }
  if (sample_count < 100) throw UsageError("sample_count must be >= 100");
  if (chain_depth < 1) throw UsageError("chain_depth must be >= 1");
  if (alpha != 0.05 && alpha != 0.01) {
    throw UsageError("alpha must be 0.05 or 0.01");
  }
  if (points < 2) throw UsageError("points must be >= 2");
  if (walk_length < 1) throw UsageError("walk_length must be >= 1");
  if (d == 0.0) throw UsageError("chain coefficient d must be nonzero");
  if (!(a0 > 0.0)) throw UsageError("a0 must be > 0");
}

void apply_config_value(const std::string& key, const std::string& value,
                        ExperimentConfig& config) {
  if (key == "experiment") {
    config.experiment = value;
  } else if (key == "mode") {
    config.mode = value;
  } else if (key == "seed") {
    config.seed.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "stream") {
    config.seed.stream = parse_number<std::uint64_t>(key, value);
  } else if (key == "sample_count") {
    config.sample_count = parse_number<std::size_t>(key, value);
  } else if (key == "chain_depth") {
    config.chain_depth = parse_number<unsigned>(key, value);
  } else if (key == "output_format") {
    if (value == "csv") {
      config.output_format = OutputFormat::csv;
    } else if (value == "json") {
      config.output_format = OutputFormat::json;
    } else {
      throw UsageError("output_format must be csv or json");
    }
  } else if (key == "output_path") {
    config.output_path = value;
  } else if (key == "alpha") {
    config.alpha = parse_real(key, value);
  } else if (key == "emit_density") {
    config.emit_density = parse_bool(key, value);
  } else if (key == "emit_params") {
    config.emit_params = parse_bool(key, value);
  } else if (key == "points") {
    config.points = parse_number<std::size_t>(key, value);
  } else if (key == "c") {
    config.c = parse_real(key, value);
  } else if (key == "d") {
    config.d = parse_real(key, value);
  } else if (key == "a0") {
    config.a0 = parse_real(key, value);
  } else if (key == "b0") {
    config.b0 = parse_real(key, value);
  } else if (key == "steps") {
    config.steps = value;
  } else if (key == "walk_length") {
    config.walk_length = parse_number<std::size_t>(key, value);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

void apply_config_text(const std::string& text, ExperimentConfig& config) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key=value");
    }
    apply_config_value(trim(t.substr(0, eq)), trim(t.substr(eq + 1)), config);
  }
}

ExperimentReport run(const ExperimentConfig& config) {
  config.validate();
  if (config.experiment == "verify-all") return verify_all(config.seed);

  ExperimentReport report;
  report.experiment = config.experiment;
  if (!config.mode.empty()) report.experiment += " " + config.mode;
  report.seed = config.seed;

  if (config.experiment == "transform-verify") {
    if (config.mode == "centered") transform_centered(config, report);
    if (config.mode == "noncentered") transform_noncentered(config, report);
    if (config.mode == "scaled") transform_scaled(config, report);
  } else if (config.experiment == "chain") {
    if (config.mode == "v") chain_v(config, report);
    if (config.mode == "w") chain_w(config, report);
    if (config.mode == "u") chain_u(config, report);
  } else if (config.experiment == "walk") {
    if (config.mode == "euclid") walk_euclid(config, report);
    if (config.mode == "hyperbolic") walk_hyperbolic(config, report);
  } else if (config.experiment == "golden") {
    golden(config, report);
  }
  return report;
}

int exit_code(const ExperimentReport& report) {
  return report.all_passed() ? 0 : 1;
}

std::string render(const ExperimentReport& report, OutputFormat format) {
  return format == OutputFormat::json ? to_json(report) : to_csv(report);
}

}  // namespace cauchy_angles
