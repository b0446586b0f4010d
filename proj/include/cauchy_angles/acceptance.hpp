#pragma once

#include <string>
#include <vector>

#include "cauchy_angles/report.hpp"
#include "cauchy_angles/rng.hpp"

namespace cauchy_angles {

/// One exit criterion with its individual checks.
struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Verdict> checks;

  bool passed() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..10). Criterion 11, byte-identical reruns, is
/// checked by callers by running `verify_all` twice.
CriterionResult run_criterion(int id, RngSeed seed);

/// All criteria in order, flattened into a report named "verify-all".
ExperimentReport verify_all(RngSeed seed);

}  // namespace cauchy_angles
