#include <string>

#include "cauchy_angles/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cauchy_angles;

namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.experiment = "demo";
  r.seed = {9, 4};
  r.rows.push_back({"plain", 1.0, "1/3"});
  r.rows.push_back({"needs, quoting", 0.1, "say \"hi\""});
  GoFReport g;
  g.statistic = 0.001;
  g.threshold = 0.00163;
  g.n = 1000000;
  g.pole_discards = 2;
  g.passed = true;
  r.verdicts.push_back({"ks", g});
  r.verdicts.push_back(tolerance_verdict("tol", 0.5, 0.25));
  return r;
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-2.5e-42) == "-2.5e-42");
  CHECK(std::stod(format_real(0.7071067811865476)) == 0.7071067811865476);
}

TEST_CASE("verdict helpers") {
  const auto pass = tolerance_verdict("a", 1e-13, 1e-12);
  CHECK(pass.result.passed);
  CHECK(pass.result.n == 1);
  CHECK_FALSE(tolerance_verdict("a", 1e-12, 1e-12).result.passed);
  CHECK(boolean_verdict("b", true).result.passed);
  CHECK(boolean_verdict("b", false).result.statistic == 1.0);
  CHECK_FALSE(boolean_verdict("b", false).result.passed);
}

TEST_CASE("all_passed") {
  auto r = sample_report();
  CHECK_FALSE(r.all_passed());
  r.verdicts.pop_back();
  CHECK(r.all_passed());
  r.verdicts.clear();
  CHECK(r.all_passed());
}

TEST_CASE("csv layout") {
  const std::string csv = to_csv(sample_report());
  const std::string expected =
      "record,label,x,value,statistic,threshold,n,passed,pole_discards\r\n"
      "row,plain,1,1/3,,,,,\r\n"
      "row,\"needs, quoting\",0.10000000000000001,\"say \"\"hi\"\"\",,,,,\r\n"
      "verdict,ks,,,0.001,0.0016299999999999999,1000000,true,2\r\n"
      "verdict,tol,,,0.5,0.25,1,false,0\r\n";
  CHECK(csv == expected);
}

TEST_CASE("json layout") {
  const std::string text = to_json(sample_report());
  const auto j = nlohmann::json::parse(text);
  CHECK(j["experiment"] == "demo");
  CHECK(j["metadata"]["seed"] == 9);
  CHECK(j["metadata"]["stream"] == 4);
  CHECK(j["metadata"]["version"] == kVersion);
  CHECK(j["passed"] == false);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][1]["label"] == "needs, quoting");
  CHECK(j["rows"][1]["x"] == 0.1);
  CHECK(j["rows"][0]["value"] == "1/3");
  REQUIRE(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["n"] == 1000000);
  CHECK(j["verdicts"][0]["pole_discards"] == 2);
  CHECK(j["verdicts"][1]["passed"] == false);

  // Keys appear in sorted order.
  const auto e = text.find("\"experiment\"");
  const auto m = text.find("\"metadata\"");
  const auto p = text.find("\"passed\"");
  const auto r = text.find("\"rows\"");
  const auto v = text.find("\"verdicts\"");
  CHECK(e < m);
  CHECK(m < p);
  CHECK(p < r);
  CHECK(r < v);
  CHECK(text.back() == '\n');
}

TEST_CASE("rendering is deterministic") {
  CHECK(to_csv(sample_report()) == to_csv(sample_report()));
  CHECK(to_json(sample_report()) == to_json(sample_report()));
}
