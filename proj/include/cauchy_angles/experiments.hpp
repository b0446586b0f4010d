#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "cauchy_angles/report.hpp"
#include "cauchy_angles/rng.hpp"

namespace cauchy_angles {

/// Bad experiment name, mode or parameter value. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct ExperimentConfig {
  std::string experiment;  // transform-verify | chain | walk | golden | verify-all
  std::string mode;        // centered|noncentered|scaled, v|w|u, euclid|hyperbolic
  RngSeed seed{};
  std::size_t sample_count = 100000;
  unsigned chain_depth = 10;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  double alpha = 0.01;

  bool emit_density = false;
  bool emit_params = false;
  std::size_t points = 256;

  // W chain: constant step coefficients and the law of W_0.
  double c = 1.0;
  double d = 1.0;
  double a0 = 1.0;
  double b0 = 0.0;

  // Walks: "d:a:b,d:a:b,..." (Euclidean) and the number of steps used when
  // the spec is empty or for the hyperbolic walk.
  std::string steps;
  std::size_t walk_length = 5;

  /// Throws UsageError when a field is out of range or the name is unknown.
  void validate() const;
};

/// Applies flat `key=value` lines onto `config`. Blank lines and lines
/// starting with '#' are ignored. Unknown keys or unparsable values throw
/// UsageError.
void apply_config_text(const std::string& text, ExperimentConfig& config);

/// Applies a single key=value setting.
void apply_config_value(const std::string& key, const std::string& value,
                        ExperimentConfig& config);

/// Runs the configured experiment. Deterministic in the config.
ExperimentReport run(const ExperimentConfig& config);

/// 0 when every verdict passes, 1 otherwise.
int exit_code(const ExperimentReport& report);

std::string render(const ExperimentReport& report, OutputFormat format);

}  // namespace cauchy_angles
