#include <cstdio>
#include <string>

#include "cauchy_angles/acceptance.hpp"
#include "cauchy_angles/experiments.hpp"

using namespace cauchy_angles;

namespace {

void print_line(int id, bool ok, const std::string& title) {
  std::printf("criterion %2d %s  %s\n", id, ok ? "PASS" : "FAIL",
              title.c_str());
}

}  // namespace

int main() {
  const RngSeed seed{20240601, 0};
  int failures = 0;

  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto result = run_criterion(id, seed);
    print_line(id, result.passed(), result.title);
    for (const auto& check : result.checks) {
      if (check.result.passed) continue;
      std::printf("    failed check %s: statistic %s threshold %s\n",
                  check.name.c_str(), format_real(check.result.statistic).c_str(),
                  format_real(check.result.threshold).c_str());
    }
    if (!result.passed()) ++failures;
  }

  const auto first = render(verify_all(seed), OutputFormat::csv);
  const auto second = render(verify_all(seed), OutputFormat::csv);
  const bool identical = first == second;
  print_line(11, identical, "verify-all reruns are byte-identical");
  if (!identical) ++failures;

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
