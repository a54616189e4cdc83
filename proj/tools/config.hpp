#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tact/dynamics.hpp"

namespace tact::cli {

/// Invalid configuration (bad file, bad field, bad combination) -> exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failure (unreadable config, unwritable output) -> exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PortraitConfig {
  std::string preset = "saddle";  // saddle | center
  double tau_end = 10.0;
  double dtau = 1e-3;
  int grid_phi = 25;  // uniform on [-pi, pi]; (grid_phi-1) % 4 == 0
  int grid_z = 15;    // odd; spacing chosen so 0 and +-1/sqrt2 are grid points
  bool has_start = false;
  double phi0 = 0.0;  // explicit single trajectory start (optional)
  double z0 = 0.0;

  bool operator==(const PortraitConfig&) const = default;
};

struct MapsConfig {
  int n_theta = 0;  // 0 -> 2N+1
  int n_phi = 0;    // 0 -> 4N+4
  bool binary = false;

  bool operator==(const MapsConfig&) const = default;
};

struct ExperimentConfig {
  std::vector<int> n_values{50};
  HamiltonianKind hamiltonian = HamiltonianKind::TACT_ROTATED;
  double theta = 0.5 * kPi;  // initial coherent state
  double phi = 0.0;
  double t_max = 0.0;  // 0 -> auto 3 ln(2 pi N)/(2N)
  int samples = 1000;
  bool fidelities = true;
  std::uint64_t seed = 0;  // reserved; the default pipeline is deterministic
  std::string out_dir = "out";
  std::string format = "csv";  // csv | json
  PortraitConfig portrait;
  MapsConfig maps;

  bool operator==(const ExperimentConfig&) const = default;

  int n() const { return n_values.front(); }
  /// t_max, resolving the auto sentinel for a given N.
  double effective_t_max(int n_particles) const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

/// Field-path-labeled validation; throws ConfigError.
void validate_config(const ExperimentConfig& config);

const char* hamiltonian_name(HamiltonianKind kind);
HamiltonianKind hamiltonian_from_name(const std::string& name);

}  // namespace tact::cli
