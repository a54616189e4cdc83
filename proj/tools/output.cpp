#include "output.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "tact/spin.hpp"

namespace tact::cli {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

RunManifest::RunManifest(std::string command, const ExperimentConfig& config)
    : command_(std::move(command)),
      config_echo_(serialize_config(config)),
      out_dir_(config.out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir_, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir_ + "': " + ec.message());
}

void RunManifest::write_file(const std::string& name, const std::string& bytes) {
  const std::filesystem::path path = std::filesystem::path(out_dir_) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
  files_.push_back({name, fnv1a64(bytes), bytes.size()});
}

void RunManifest::record_stage(const std::string& name, double seconds) {
  stages_.push_back({name, seconds});
}

void RunManifest::finalize() {
  json j;
  j["version"] = kVersion;
  j["command"] = command_;
  j["config"] = config_echo_;
  j["stages"] = json::array();
  for (const auto& s : stages_) j["stages"].push_back({{"name", s.name}, {"seconds", s.seconds}});
  j["files"] = json::array();
  for (const auto& f : files_) {
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(f.checksum));
    j["files"].push_back({{"path", f.name}, {"fnv1a64", hex}, {"bytes", f.bytes}});
  }
  const std::filesystem::path path = std::filesystem::path(out_dir_) / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string state_to_json(const VectorXcd& psi) {
  json j;
  j["N"] = particle_count(psi);
  json re = json::array(), im = json::array();
  for (int k = 0; k < psi.size(); ++k) {
    re.push_back(psi[k].real());
    im.push_back(psi[k].imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump() + "\n";
}

VectorXcd state_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("N").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n + 1 || static_cast<int>(im.size()) != n + 1)
    throw std::invalid_argument("state JSON arrays must have length N+1");
  VectorXcd psi(n + 1);
  for (int k = 0; k <= n; ++k) psi[k] = Complex(re[k].get<double>(), im[k].get<double>());
  return psi;
}

std::string map_to_csv(const SphereMap& map) {
  std::string out = "theta,phi,value\n";
  for (int i = 0; i < map.grid.n_theta(); ++i)
    for (int j = 0; j < map.grid.n_phi(); ++j) {
      out += format_double(map.grid.theta[i]);
      out += ',';
      out += format_double(map.grid.phi[j]);
      out += ',';
      out += format_double(map.values(i, j));
      out += '\n';
    }
  return out;
}

std::string map_to_binary(const SphereMap& map) {
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(map.grid.n_theta()),
                                 static_cast<std::uint32_t>(map.grid.n_phi())};
  std::string out(sizeof dims + sizeof(double) * map.values.size(), '\0');
  std::memcpy(out.data(), dims, sizeof dims);
  // row-major float64, little-endian (native on every supported target)
  char* p = out.data() + sizeof dims;
  for (int i = 0; i < map.values.rows(); ++i)
    for (int j = 0; j < map.values.cols(); ++j) {
      const double v = map.values(i, j);
      std::memcpy(p, &v, sizeof v);
      p += sizeof v;
    }
  return out;
}

}  // namespace tact::cli
