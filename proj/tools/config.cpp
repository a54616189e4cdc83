#include "config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tact/mean_field.hpp"

namespace tact::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& path, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(path + ": expected a number, got '" + v + "'");
  }
}

long parse_int(const std::string& path, const std::string& v) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(path + ": expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& path, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(path + ": expected true/false, got '" + v + "'");
}

std::vector<int> parse_int_list(const std::string& path, const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(path + ": empty list entry");
    out.push_back(static_cast<int>(parse_int(path, item)));
  }
  if (out.empty()) throw ConfigError(path + ": empty list");
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* hamiltonian_name(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::TACT_ORIGINAL: return "tact_original";
    case HamiltonianKind::TACT_ROTATED: return "tact_rotated";
    case HamiltonianKind::TACT_EQUIVALENT: return "tact_equivalent";
    case HamiltonianKind::OAT: return "oat";
  }
  return "?";
}

HamiltonianKind hamiltonian_from_name(const std::string& name) {
  if (name == "tact_original") return HamiltonianKind::TACT_ORIGINAL;
  if (name == "tact_rotated") return HamiltonianKind::TACT_ROTATED;
  if (name == "tact_equivalent") return HamiltonianKind::TACT_EQUIVALENT;
  if (name == "oat") return HamiltonianKind::OAT;
  throw ConfigError("experiment.hamiltonian: unknown kind '" + name +
                    "' (tact_original|tact_rotated|tact_equivalent|oat)");
}

double ExperimentConfig::effective_t_max(int n_particles) const {
  if (t_max > 0.0) return t_max;
  return 3.0 * best_time_estimates(std::max(n_particles, 2), BestTimeKind::QFI_EMPIRICAL);
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::string section = "experiment";
  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = trim(raw);
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "experiment" && section != "portrait" && section != "maps")
        throw ConfigError("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string path = section + "." + key;

    if (section == "experiment") {
      if (key == "n") c.n_values = parse_int_list(path, value);
      else if (key == "hamiltonian") c.hamiltonian = hamiltonian_from_name(value);
      else if (key == "theta") c.theta = parse_double(path, value);
      else if (key == "phi") c.phi = parse_double(path, value);
      else if (key == "t_max") c.t_max = parse_double(path, value);
      else if (key == "samples") c.samples = static_cast<int>(parse_int(path, value));
      else if (key == "fidelities") c.fidelities = parse_bool(path, value);
      else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(path, value));
      else if (key == "out") c.out_dir = value;
      else if (key == "format") c.format = value;
      else throw ConfigError(path + ": unknown key");
    } else if (section == "portrait") {
      if (key == "preset") c.portrait.preset = value;
      else if (key == "tau_end") c.portrait.tau_end = parse_double(path, value);
      else if (key == "dtau") c.portrait.dtau = parse_double(path, value);
      else if (key == "grid_phi") c.portrait.grid_phi = static_cast<int>(parse_int(path, value));
      else if (key == "grid_z") c.portrait.grid_z = static_cast<int>(parse_int(path, value));
      else if (key == "phi0") { c.portrait.phi0 = parse_double(path, value); c.portrait.has_start = true; }
      else if (key == "z0") { c.portrait.z0 = parse_double(path, value); c.portrait.has_start = true; }
      else throw ConfigError(path + ": unknown key");
    } else {  // maps
      if (key == "n_theta") c.maps.n_theta = static_cast<int>(parse_int(path, value));
      else if (key == "n_phi") c.maps.n_phi = static_cast<int>(parse_int(path, value));
      else if (key == "binary") c.maps.binary = parse_bool(path, value);
      else throw ConfigError(path + ": unknown key");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[experiment]\n";
  out << "n = ";
  for (std::size_t i = 0; i < c.n_values.size(); ++i)
    out << (i ? "," : "") << c.n_values[i];
  out << "\n";
  out << "hamiltonian = " << hamiltonian_name(c.hamiltonian) << "\n";
  out << "theta = " << fmt(c.theta) << "\n";
  out << "phi = " << fmt(c.phi) << "\n";
  out << "t_max = " << fmt(c.t_max) << "\n";
  out << "samples = " << c.samples << "\n";
  out << "fidelities = " << (c.fidelities ? "true" : "false") << "\n";
  out << "seed = " << c.seed << "\n";
  out << "out = " << c.out_dir << "\n";
  out << "format = " << c.format << "\n";
  out << "\n[portrait]\n";
  out << "preset = " << c.portrait.preset << "\n";
  out << "tau_end = " << fmt(c.portrait.tau_end) << "\n";
  out << "dtau = " << fmt(c.portrait.dtau) << "\n";
  out << "grid_phi = " << c.portrait.grid_phi << "\n";
  out << "grid_z = " << c.portrait.grid_z << "\n";
  if (c.portrait.has_start) {
    out << "phi0 = " << fmt(c.portrait.phi0) << "\n";
    out << "z0 = " << fmt(c.portrait.z0) << "\n";
  }
  out << "\n[maps]\n";
  out << "n_theta = " << c.maps.n_theta << "\n";
  out << "n_phi = " << c.maps.n_phi << "\n";
  out << "binary = " << (c.maps.binary ? "true" : "false") << "\n";
  return out.str();
}

void validate_config(const ExperimentConfig& c) {
  if (c.n_values.empty()) throw ConfigError("experiment.n: list must be nonempty");
  for (int n : c.n_values)
    if (n < 1) throw ConfigError("experiment.n: every N must be >= 1");
  if (!(c.theta >= 0.0 && c.theta <= kPi))
    throw ConfigError("experiment.theta: must lie in [0, pi]");
  if (!(c.phi >= -kPi && c.phi < kPi))
    throw ConfigError("experiment.phi: must lie in [-pi, pi)");
  if (c.t_max < 0.0)
    throw ConfigError("experiment.t_max: must be > 0 (or 0 for auto)");
  if (c.samples < 2) throw ConfigError("experiment.samples: must be >= 2");
  if (c.format != "csv" && c.format != "json")
    throw ConfigError("experiment.format: must be csv or json");
  if (c.out_dir.empty()) throw ConfigError("experiment.out: must be nonempty");

  const auto& p = c.portrait;
  if (p.preset != "saddle" && p.preset != "center")
    throw ConfigError("portrait.preset: must be saddle or center");
  if (p.tau_end <= 0.0) throw ConfigError("portrait.tau_end: must be > 0");
  if (p.dtau <= 0.0 || p.dtau > p.tau_end)
    throw ConfigError("portrait.dtau: must lie in (0, tau_end]");
  if (p.grid_phi < 5 || (p.grid_phi - 1) % 4 != 0)
    throw ConfigError("portrait.grid_phi: must be 4k+1 and >= 5");
  if (p.grid_z < 5 || p.grid_z % 2 == 0)
    throw ConfigError("portrait.grid_z: must be odd and >= 5");
  if (p.has_start) {
    if (!(p.phi0 >= -kPi && p.phi0 < kPi))
      throw ConfigError("portrait.phi0: must lie in [-pi, pi)");
    if (!(std::abs(p.z0) < 1.0))
      throw ConfigError("portrait.z0: must satisfy |z0| < 1");
  }

  if (c.maps.n_theta < 0) throw ConfigError("maps.n_theta: must be >= 0 (0 = auto)");
  if (c.maps.n_phi < 0) throw ConfigError("maps.n_phi: must be >= 0 (0 = auto)");
}

}  // namespace tact::cli
