// Experiment runner: every simulation and verification as a subcommand.
//
// Precedence: command-line flags > config file (--config) > CAUCHY_ANGLES_SEED
// (seed only) > built-in defaults.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cauchy_angles/experiments.hpp"

namespace {

using cauchy_angles::ExperimentConfig;
using cauchy_angles::UsageError;

constexpr int kUsageExit = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy angular processes: simulations and exact chains"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  // Flag values are kept as strings and routed through the same key=value
  // parser as the config file.
  std::string config_path;
  std::map<std::string, std::string> flags;
  const auto flag = [&](CLI::App& on, const std::string& name,
                        const std::string& key, const std::string& help) {
    return on.add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };

  app.add_option("--config", config_path, "flat key=value config file");
  flag(app, "--seed", "seed", "RNG seed");
  flag(app, "--stream", "stream", "RNG sub-stream");
  flag(app, "--n", "sample_count", "Monte Carlo sample count");
  flag(app, "--format", "output_format", "csv or json");
  flag(app, "--output,-o", "output_path", "report path (default: stdout)");
  flag(app, "--alpha", "alpha", "KS significance level, 0.05 or 0.01");

  auto* transform = app.add_subcommand("transform-verify",
                                       "Monte Carlo checks of the closure laws");
  auto* centered = transform->add_flag("--centered", "U, Z1-Z3 and general maps");
  auto* noncentered =
      transform->add_flag("--noncentered", "20 random non-centered pairs");
  auto* scaled = transform->add_flag("--scaled", "scaled centered inputs");

  auto* chain = app.add_subcommand("chain", "continued-fraction chains v, w, u");
  std::string chain_kind;
  chain->add_option("kind", chain_kind, "v, w or u")->required();
  flag(*chain, "--depth", "chain_depth", "number of chain levels");
  auto* emit_density = chain->add_flag("--emit-density", "density curves");
  auto* emit_params = chain->add_flag("--emit-params", "exact parameters");
  flag(*chain, "--points", "points", "density grid size");
  flag(*chain, "--c", "c", "W chain: constant c");
  flag(*chain, "--d", "d", "W chain: constant d");
  flag(*chain, "--a0", "a0", "W chain: scale of W_0");
  flag(*chain, "--b0", "b0", "W chain: location of W_0");

  auto* walk = app.add_subcommand("walk", "angular random walks");
  std::string walk_kind;
  walk->add_option("kind", walk_kind, "euclid or hyperbolic")->required();
  flag(*walk, "--steps", "steps", "d:a:b,d:a:b,... (euclid)");
  flag(*walk, "--length", "walk_length", "number of steps");

  auto* golden = app.add_subcommand("golden", "golden-ratio convergence table");
  flag(*golden, "--depth", "chain_depth", "largest n");

  auto* verify = app.add_subcommand("verify-all", "full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  ExperimentConfig config;
  try {
    if (const char* env = std::getenv("CAUCHY_ANGLES_SEED")) {
      apply_config_value("seed", env, config);
    }
    if (!config_path.empty()) apply_config_text(read_file(config_path), config);

    if (transform->parsed()) {
      if (config.experiment != "transform-verify") config.mode.clear();
      config.experiment = "transform-verify";
      const int chosen = static_cast<int>(centered->count() > 0) +
                         static_cast<int>(noncentered->count() > 0) +
                         static_cast<int>(scaled->count() > 0);
      if (chosen > 1) {
        throw UsageError("choose one of --centered, --noncentered, --scaled");
      }
      if (noncentered->count()) config.mode = "noncentered";
      else if (scaled->count()) config.mode = "scaled";
      else if (centered->count() || config.mode.empty()) config.mode = "centered";
    } else if (chain->parsed()) {
      config.experiment = "chain";
      config.mode = chain_kind;
      if (emit_density->count()) config.emit_density = true;
      if (emit_params->count()) config.emit_params = true;
    } else if (walk->parsed()) {
      config.experiment = "walk";
      config.mode = walk_kind;
    } else if (golden->parsed()) {
      config.experiment = "golden";
      config.mode.clear();
    } else if (verify->parsed()) {
      config.experiment = "verify-all";
      config.mode.clear();
    }
    for (const auto& [key, value] : flags) apply_config_value(key, value, config);
    if (config.experiment.empty()) {
      throw UsageError("no experiment given; use a subcommand or 'experiment='");
    }
    config.validate();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsageExit;
  }

  const auto start = std::chrono::steady_clock::now();
  cauchy_angles::ExperimentReport report;
  try {
    report = cauchy_angles::run(config);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  const std::string text = cauchy_angles::render(report, config.output_format);
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << config.output_path << "'\n";
      return kUsageExit;
    }
    out << text;
  }

  for (const auto& v : report.verdicts) {
    if (!v.result.passed) {
      std::cerr << "FAIL " << v.name << ": statistic "
                << cauchy_angles::format_real(v.result.statistic)
                << " threshold "
                << cauchy_angles::format_real(v.result.threshold) << "\n";
    }
  }
  std::cerr << report.experiment << ": "
            << (report.all_passed() ? "all verdicts passed" : "FAILED") << " ("
            << report.verdicts.size() << " verdicts, " << elapsed.count()
            << " s)\n";
  return cauchy_angles::exit_code(report);
}
