#pragma once

#include "config.hpp"

namespace tact::cli {

// Each runner assumes a validated config, writes its outputs plus
// manifest.json into config.out_dir, and throws on failure:
// ConfigError for bad run-specific fields, IoError for filesystem
// problems, std::runtime_error / std::domain_error for numerical ones.

void run_evolve(const ExperimentConfig& config);
void run_scaling(const ExperimentConfig& config);
void run_maps(const ExperimentConfig& config);
void run_portrait(const ExperimentConfig& config);
void run_approx(const ExperimentConfig& config);

}  // namespace tact::cli
