#include <algorithm>
#include <string>

#include "cauchy_angles/experiments.hpp"
#include "doctest.h"

using namespace cauchy_angles;

namespace {

ExperimentConfig make(const std::string& experiment, const std::string& mode) {
  ExperimentConfig c;
  c.experiment = experiment;
  c.mode = mode;
  c.seed = {3, 0};
  c.sample_count = 20000;
  return c;
}

const ReportRow* find_row(const ExperimentReport& r, const std::string& label,
                          double x) {
  const auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const auto& row) {
    return row.label == label && row.x == x;
  });
  return it == r.rows.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("config text") {
  ExperimentConfig c;
  apply_config_text(
      "# comment\n"
      "\n"
      "experiment = chain\n"
      "mode=w\n"
      "seed=12\n"
      "stream=3\n"
      "sample_count=5000\n"
      "chain_depth=7\n"
      "output_format=json\n"
      "alpha=0.05\n"
      "emit_density=true\n"
      "c=2\n"
      "d=-1.5\n",
      c);
  CHECK(c.experiment == "chain");
  CHECK(c.mode == "w");
  CHECK(c.seed == RngSeed{12, 3});
  CHECK(c.sample_count == 5000);
  CHECK(c.chain_depth == 7);
  CHECK(c.output_format == OutputFormat::json);
  CHECK(c.alpha == 0.05);
  CHECK(c.emit_density);
  CHECK(c.c == 2.0);
  CHECK(c.d == -1.5);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("config errors") {
  ExperimentConfig c;
  CHECK_THROWS_AS(apply_config_text("nonsense\n", c), UsageError);
  CHECK_THROWS_AS(apply_config_text("colour=blue\n", c), UsageError);
  CHECK_THROWS_AS(apply_config_value("seed", "-4", c), UsageError);
  CHECK_THROWS_AS(apply_config_value("sample_count", "12x", c), UsageError);
  CHECK_THROWS_AS(apply_config_value("output_format", "xml", c), UsageError);
  CHECK_THROWS_AS(apply_config_value("emit_density", "maybe", c), UsageError);

  auto bad = make("chain", "v");
  bad.sample_count = 99;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = make("chain", "v");
  bad.chain_depth = 0;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = make("chain", "x");
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = make("chain", "v");
  bad.alpha = 0.1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  CHECK_THROWS_AS(run(make("frobnicate", "")), UsageError);

  auto walk = make("walk", "euclid");
  walk.steps = "1:1";
  CHECK_THROWS_AS(run(walk), UsageError);
  walk.steps = "1:-1:0";
  CHECK_THROWS_AS(run(walk), UsageError);
}

TEST_CASE("chain v reaches depth 100") {
  auto c = make("chain", "v");
  c.chain_depth = 100;
  const auto r = run(c);
  CHECK(r.all_passed());
  CHECK(exit_code(r) == 0);
  const auto* a = find_row(r, "a_n", 100);
  const auto* b = find_row(r, "b_n", 100);
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(a->value == "1/453973694165307953197296969697410619233826");
  CHECK(b->value ==
        "280571172992510140037611932413038677189525/"
        "453973694165307953197296969697410619233826");
  CHECK(find_row(r, "a_n", 1)->value == "1/2");
}

TEST_CASE("every mode runs and passes") {
  const std::pair<const char*, const char*> cases[] = {
      {"transform-verify", "centered"}, {"transform-verify", "noncentered"},
      {"transform-verify", "scaled"},   {"chain", "v"},
      {"chain", "w"},                   {"chain", "u"},
      {"walk", "euclid"},               {"walk", "hyperbolic"},
      {"golden", ""}};
  for (const auto& [name, m] : cases) {
    const std::string experiment = name, mode = m;
    CAPTURE(experiment);
    CAPTURE(mode);
    auto c = make(experiment, mode);
    c.chain_depth = experiment == "golden" ? 24 : 4;
    c.emit_density = true;
    c.emit_params = true;
    c.points = 8;
    const auto r = run(c);
    CHECK(!r.rows.empty());
    CHECK(!r.verdicts.empty());
    CHECK(r.all_passed());
    CHECK(r.experiment.starts_with(experiment));
  }
}

TEST_CASE("reports are deterministic") {
  auto c = make("walk", "euclid");
  c.steps = "1:1:0,2:0.5:1";
  const auto csv1 = render(run(c), OutputFormat::csv);
  const auto csv2 = render(run(c), OutputFormat::csv);
  CHECK(csv1 == csv2);
  const auto json1 = render(run(c), OutputFormat::json);
  CHECK(json1 == render(run(c), OutputFormat::json));
  c.seed = {4, 0};
  CHECK(render(run(c), OutputFormat::csv) != csv1);
}

TEST_CASE("failed verdicts map to exit code 1") {
  ExperimentReport r;
  r.verdicts.push_back({"x", GoFReport{}});
  CHECK(exit_code(r) == 1);
  r.verdicts.front().result.passed = true;
  CHECK(exit_code(r) == 0);
}
