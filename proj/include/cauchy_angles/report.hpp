#pragma once

#include <string>
#include <vector>

#include "cauchy_angles/rng.hpp"
#include "cauchy_angles/stats.hpp"

namespace cauchy_angles {

inline constexpr const char* kVersion = "0.1.0";

/// One data point. `value` is already rendered: 17 significant digits for
/// reals, "p/q" for exact rationals.
struct ReportRow {
  std::string label;
  double x = 0.0;
  std::string value;
};

/// A named pass/fail check. Non-statistical checks reuse GoFReport with the
/// observed error as statistic and the tolerance as threshold.
struct Verdict {
  std::string name;
  GoFReport result;
};

struct ExperimentReport {
  std::string experiment;
  RngSeed seed;
  std::vector<ReportRow> rows;
  std::vector<Verdict> verdicts;

  bool all_passed() const;
};

/// Real number with 17 significant digits, '.' decimal separator.
std::string format_real(double x);

/// Verdict for |observed - expected| < tolerance (n = 1).
Verdict tolerance_verdict(std::string name, double error, double tolerance);

/// Verdict that passes iff `ok` (statistic 0 or 1, threshold 0.5).
Verdict boolean_verdict(std::string name, bool ok);

/// Header `record,label,x,value,statistic,threshold,n,passed,pole_discards`;
/// data rows have record "row", checks have record "verdict".
std::string to_csv(const ExperimentReport& report);

/// UTF-8 JSON with sorted keys, matching schemas/report.schema.json.
std::string to_json(const ExperimentReport& report);

}  // namespace cauchy_angles
