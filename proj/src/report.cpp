#include "cauchy_angles/report.hpp"

#include <algorithm>
#include <cstdio>
#include "json.hpp"
#include <sstream>

namespace cauchy_angles {

bool ExperimentReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.result.passed; });
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Verdict tolerance_verdict(std::string name, double error, double tolerance) {
  GoFReport r;
  r.statistic = error;
  r.threshold = tolerance;
  r.n = 1;
  r.passed = error < tolerance;
  return {std::move(name), r};
}

Verdict boolean_verdict(std::string name, bool ok) {
  GoFReport r;
  r.statistic = ok ? 0.0 : 1.0;
  r.threshold = 0.5;
  r.n = 1;
  r.passed = ok;
  return {std::move(name), r};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "record,label,x,value,statistic,threshold,n,passed,pole_discards\r\n";
  for (const auto& row : report.rows) {
    out << "row," << csv_field(row.label) << ',' << format_real(row.x) << ','
        << csv_field(row.value) << ",,,,,\r\n";
  }
  for (const auto& v : report.verdicts) {
    out << "verdict," << csv_field(v.name) << ",,,"
        << format_real(v.result.statistic) << ','
        << format_real(v.result.threshold) << ',' << v.result.n << ','
        << (v.result.passed ? "true" : "false") << ','
        << v.result.pole_discards << "\r\n";
  }
  return out.str();
}

std::string to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["metadata"] = {{"seed", report.seed.seed},
                   {"stream", report.seed.stream},
                   {"version", kVersion}};
  j["passed"] = report.all_passed();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    j["rows"].push_back(
        {{"label", row.label}, {"x", row.x}, {"value", row.value}});
  }
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back({{"name", v.name},
                             {"statistic", v.result.statistic},
                             {"threshold", v.result.threshold},
                             {"n", v.result.n},
                             {"passed", v.result.passed},
                             {"pole_discards", v.result.pole_discards}});
  }
  return j.dump(2) + "\n";
}

}  // namespace cauchy_angles
