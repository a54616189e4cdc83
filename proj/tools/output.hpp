#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "tact/phase_space.hpp"
#include "tact/types.hpp"

namespace tact::cli {

/// FNV-1a 64-bit checksum of a byte string.
std::uint64_t fnv1a64(const std::string& bytes);

std::string format_double(double v);  // %.12g; deterministic across reruns

/// Collects files (path + checksum) and per-stage wall-clock, then writes
/// manifest.json. Every emitted file must pass through write_file().
class RunManifest {
 public:
  RunManifest(std::string command, const ExperimentConfig& config);

  /// Writes bytes to out_dir/name (creating out_dir), records the checksum.
  void write_file(const std::string& name, const std::string& bytes);
  void record_stage(const std::string& name, double seconds);
  void finalize();  // writes manifest.json into out_dir

  const std::string& out_dir() const { return out_dir_; }

 private:
  std::string command_;
  std::string config_echo_;
  std::string out_dir_;
  struct FileEntry { std::string name; std::uint64_t checksum; std::size_t bytes; };
  struct StageEntry { std::string name; double seconds; };
  std::vector<FileEntry> files_;
  std::vector<StageEntry> stages_;
};

/// Wall-clock helper: runs fn, records its duration under `name`.
template <typename Fn>
void timed_stage(RunManifest& manifest, const std::string& name, Fn&& fn);

/// {"N": ..., "re": [...], "im": [...]}
std::string state_to_json(const VectorXcd& psi);
VectorXcd state_from_json(const std::string& text);

/// CSV with header "theta,phi,value".
std::string map_to_csv(const SphereMap& map);
/// Two little-endian uint32 dims then row-major float64 values.
std::string map_to_binary(const SphereMap& map);

// --- implementation ---

template <typename Fn>
void timed_stage(RunManifest& manifest, const std::string& name, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  manifest.record_stage(name, dt.count());
}

}  // namespace tact::cli
