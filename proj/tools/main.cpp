#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"

namespace {

using tact::cli::ExperimentConfig;

// Flags shared by every subcommand; each overrides the config file.
struct Overrides {
  std::string config_path;
  std::string out_dir;
  std::vector<int> n_values;
  double t_max = -1.0;
  int samples = -1;
  std::string format;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "TOML-style config file");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--n", o.n_values, "particle number(s)");
  cmd->add_option("--tmax", o.t_max, "chi*t sweep end (0 = auto)");
  cmd->add_option("--samples", o.samples, "sweep sample count");
  cmd->add_option("--format", o.format, "observable table format: csv | json");
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig config;
  if (!o.config_path.empty()) config = tact::cli::load_config(o.config_path);
  if (!o.out_dir.empty()) config.out_dir = o.out_dir;
  if (!o.n_values.empty()) config.n_values = o.n_values;
  if (o.t_max >= 0.0) config.t_max = o.t_max;
  if (o.samples >= 0) config.samples = o.samples;
  if (!o.format.empty()) config.format = o.format;
  tact::cli::validate_config(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tact: collective-spin dynamics under two-axis counter-twisting"};
  app.require_subcommand(1);

  Overrides o;
  void (*runner)(const ExperimentConfig&) = nullptr;
  const std::pair<const char*, void (*)(const ExperimentConfig&)> commands[] = {
      {"evolve", tact::cli::run_evolve},     {"scaling", tact::cli::run_scaling},
      {"maps", tact::cli::run_maps},         {"portrait", tact::cli::run_portrait},
      {"approx", tact::cli::run_approx},
  };
  for (const auto& [name, fn] : commands) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_flags(cmd, o);
    cmd->callback([&runner, fn = fn] { runner = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad flags are a config problem
  }

  try {
    runner(resolve(o));
  } catch (const tact::cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const tact::cli::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
