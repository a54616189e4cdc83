#include "experiments.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include <json.hpp>

#include "output.hpp"
#include "tact/mean_field.hpp"
#include "tact/metrology.hpp"
#include "tact/numeric.hpp"
#include "tact/phase_space.hpp"
#include "tact/sweep.hpp"

namespace tact::cli {

namespace {

std::string cell(double v) {
  return std::isnan(v) ? "nan" : format_double(v);
}

constexpr const char* kObservableHeader =
    "chi_t,xi2,FQ,mean_Sx,mean_Sy,mean_Sz,var_Sy,var_Sz,"
    "fid_BW,fid_EWSS,fid_Y,fid_TF,fid_NOON";

std::vector<double> row_cells(const ObservableRow& r) {
  return {r.chi_t,  r.xi2,      r.fq,    r.mean.x(), r.mean.y(), r.mean.z(), r.var_sy,
          r.var_sz, r.fid_bw,   r.fid_ewss, r.fid_y, r.fid_tf,   r.fid_noon};
}

std::string observables_csv(const SweepResult& sweep) {
  std::string out = std::string(kObservableHeader) + "\n";
  for (const auto& r : sweep.rows) {
    const auto cells = row_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += i ? "," : "";
      out += cell(cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::string observables_json(const SweepResult& sweep) {
  nlohmann::json j;
  std::stringstream header(kObservableHeader);
  std::string name;
  j["columns"] = nlohmann::json::array();
  while (std::getline(header, name, ',')) j["columns"].push_back(name);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : sweep.rows) j["rows"].push_back(row_cells(r));
  return j.dump() + "\n";
}

struct Refined {
  double chi_t;
  double value;
};

// Grid bracket + parabolic refinement of a continuous time observable.
Refined refined_extremum(const std::vector<double>& times, const std::vector<double>& grid,
                         int idx, const std::function<double(double)>& f, bool maximize) {
  const auto g = [&](double t) { return maximize ? f(t) : -f(t); };
  if (idx <= 0 || idx + 1 >= static_cast<int>(times.size()))
    return {times[std::max(idx, 0)], f(times[std::max(idx, 0)])};
  const Extremum ex = refine_maximum(g, times[idx - 1], times[idx], times[idx + 1],
                                     1e-6 * (times[1] - times[0]));
  return {ex.x, maximize ? ex.value : -ex.value};
}

int argmax_of(const std::vector<double>& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = static_cast<int>(i);
  return best;
}

int argmin_of(const std::vector<double>& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = static_cast<int>(i);
  return best;
}

}  // namespace

void run_evolve(const ExperimentConfig& config) {
  RunManifest manifest("evolve", config);
  const int n = config.n();
  const SpinMatrices s = build_spin_matrices(n);
  const VectorXcd psi0 = coherent_state(config.theta, config.phi, n);

  std::unique_ptr<Propagator> prop;
  timed_stage(manifest, "diagonalize", [&] {
    prop = std::make_unique<Propagator>(build_hamiltonian(s, config.hamiltonian));
  });

  const auto times = make_time_grid(config.effective_t_max(n), config.samples);
  SweepResult sweep;
  timed_stage(manifest, "sweep", [&] {
    sweep = sweep_observables(*prop, s, psi0, times, {config.fidelities});
  });

  timed_stage(manifest, "write", [&] {
    if (config.format == "json")
      manifest.write_file("observables.json", observables_json(sweep));
    else
      manifest.write_file("observables.csv", observables_csv(sweep));
    manifest.write_file("state_final.json", state_to_json(prop->evolve(psi0, times.back())));
  });
  manifest.finalize();
}

void run_scaling(const ExperimentConfig& config) {
  if (config.n_values.size() < 2)
    throw ConfigError("experiment.n: scaling needs at least two N values");
  RunManifest manifest("scaling", config);

  struct Row {
    int n;
    double t_best_xi, xi2_best, t_best_fq, fq_best;
    double model_t_xi, model_xi2, model_t_fq, model_fq;
  };

  auto one_n = [&](int n) {
    const SpinMatrices s = build_spin_matrices(n);
    const VectorXcd psi0 = coherent_state(config.theta, config.phi, n);
    const Propagator prop(build_hamiltonian(s, config.hamiltonian));
    const auto times = make_time_grid(config.effective_t_max(n), config.samples);
    const SweepResult sweep = sweep_observables(prop, s, psi0, times, {false});

    std::vector<double> xi2(times.size()), fq(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      xi2[i] = sweep.rows[i].xi2;
      fq[i] = sweep.rows[i].fq;
    }
    auto xi2_at = [&](double t) {
      return squeezing_parameter(spin_moments(prop.evolve(psi0, t), s), n);
    };
    auto fq_at = [&](double t) {
      return qfi_pure(spin_moments(prop.evolve(psi0, t), s)).value;
    };
    const Refined best_xi =
        refined_extremum(times, xi2, argmin_of(xi2), xi2_at, /*maximize=*/false);
    int fq_idx = first_local_max(fq);
    if (fq_idx < 0) fq_idx = argmax_of(fq);
    const Refined best_fq = refined_extremum(times, fq, fq_idx, fq_at, /*maximize=*/true);

    const GaussianAsymptotics asym = gaussian_asymptotics(n);
    return Row{n,
               best_xi.chi_t,
               best_xi.value,
               best_fq.chi_t,
               best_fq.value,
               best_time_estimates(n, BestTimeKind::SQUEEZING_MODEL),
               asym.xi2_best,
               best_time_estimates(n, BestTimeKind::QFI_EMPIRICAL),
               asym.fq_best};
  };

  std::vector<Row> rows(config.n_values.size());
  timed_stage(manifest, "sweep", [&] {
    std::vector<std::future<Row>> futures;
    futures.reserve(config.n_values.size());
    for (int n : config.n_values)
      futures.push_back(std::async(std::launch::async, one_n, n));
    for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
  });

  timed_stage(manifest, "write", [&] {
    std::string out = "N,t_best_xi,xi2_best,t_best_FQ,FQ_best,"
                      "model_t_xi,model_xi2,model_t_FQ,model_FQ\n";
    for (const auto& r : rows) {
      out += std::to_string(r.n);
      for (double v : {r.t_best_xi, r.xi2_best, r.t_best_fq, r.fq_best, r.model_t_xi,
                       r.model_xi2, r.model_t_fq, r.model_fq}) {
        out += ',';
        out += cell(v);
      }
      out += '\n';
    }
    manifest.write_file("scaling.csv", out);
  });
  manifest.finalize();
}

void run_maps(const ExperimentConfig& config) {
  const int n = config.n();
  if (n % 2 != 0)
    throw ConfigError("experiment.n: maps needs even N (twin-Fock/Yurke events)");
  RunManifest manifest("maps", config);
  const SpinMatrices s = build_spin_matrices(n);
  const VectorXcd psi0 = coherent_state(config.theta, config.phi, n);

  std::unique_ptr<Propagator> prop;
  timed_stage(manifest, "diagonalize", [&] {
    prop = std::make_unique<Propagator>(build_hamiltonian(s, config.hamiltonian));
  });

  const auto times = make_time_grid(config.effective_t_max(n), config.samples);
  SweepResult sweep;
  std::array<Event, 8> events;
  timed_stage(manifest, "sweep", [&] {
    sweep = sweep_observables(*prop, s, psi0, times, {true});
    events = locate_events(*prop, s, psi0, sweep);
  });

  const SphereGrid grid = make_sphere_grid(
      config.maps.n_theta > 0 ? config.maps.n_theta : 2 * n + 1,
      config.maps.n_phi > 0 ? config.maps.n_phi : 4 * n + 4);

  timed_stage(manifest, "maps", [&] {
    const char* labels = "ABCDEFGH";
    std::string index = "label,chi_t,value,residual\n";
    for (const auto& ev : events) {
      const char label = labels[static_cast<int>(ev.label)];
      index += label;
      index += ',' + cell(ev.chi_t) + ',' + cell(ev.value) + ',' + cell(ev.residual) + '\n';
      const VectorXcd psi = prop->evolve(psi0, ev.chi_t);
      const SphereMap q = husimi_map(psi, grid);
      const SphereMap w = wigner_map(psi, grid);
      const std::string base_q = std::string("husimi_") + label;
      const std::string base_w = std::string("wigner_") + label;
      manifest.write_file(base_q + ".csv", map_to_csv(q));
      manifest.write_file(base_w + ".csv", map_to_csv(w));
      if (config.maps.binary) {
        manifest.write_file(base_q + ".bin", map_to_binary(q));
        manifest.write_file(base_w + ".bin", map_to_binary(w));
      }
    }
    manifest.write_file("events.csv", index);
  });
  manifest.finalize();
}

void run_portrait(const ExperimentConfig& config) {
  RunManifest manifest("portrait", config);
  const PortraitConfig& p = config.portrait;

  timed_stage(manifest, "field", [&] {
    // phi uniform on [-pi, pi]; z spacing chosen so that 0 and +-1/sqrt2
    // are exact nodes (the grid then hits every fixed point exactly).
    const int half = (p.grid_z - 1) / 2;
    const int q = static_cast<int>(std::ceil(half / std::sqrt(2.0) - 1e-12));
    const double dz = 1.0 / (std::max(q, 1) * std::sqrt(2.0));
    std::string out = "phi,z,dphi,dz\n";
    for (int i = 0; i < p.grid_phi; ++i) {
      const double phi = -kPi + 2.0 * kPi * i / (p.grid_phi - 1);
      for (int j = -half; j <= half; ++j) {
        const double z = j * dz;
        const Vector2d v = mf_rhs({phi, z});
        out += cell(phi) + ',' + cell(z) + ',' + cell(v[0]) + ',' + cell(v[1]) + '\n';
      }
    }
    manifest.write_file("field.csv", out);
  });

  timed_stage(manifest, "fixed_points", [&] {
    std::string out =
        "phi,z,kind,lambda_plus_re,lambda_plus_im,lambda_minus_re,lambda_minus_im,"
        "vec1_phi,vec1_z,vec2_phi,vec2_z\n";
    for (const FixedPoint& fp : find_fixed_points()) {
      out += cell(fp.location.phi) + ',' + cell(fp.location.z) + ',';
      out += fp.kind == FixedPointKind::SADDLE ? "saddle" : "center";
      for (double v : {fp.lambda_plus.real(), fp.lambda_plus.imag(), fp.lambda_minus.real(),
                       fp.lambda_minus.imag(), fp.vectors(0, 0), fp.vectors(1, 0),
                       fp.vectors(0, 1), fp.vectors(1, 1)}) {
        out += ',';
        out += cell(v);
      }
      out += '\n';
    }
    manifest.write_file("fixed_points.csv", out);
  });

  timed_stage(manifest, "trajectories", [&] {
    std::vector<MeanFieldState> starts;
    if (p.has_start) {
      starts.push_back({p.phi0, p.z0});
    } else if (p.preset == "center") {
      for (double d : {0.03, 0.08, 0.13, 0.18})
        starts.push_back({0.5 * kPi, 1.0 / std::sqrt(2.0) + d});
    } else {  // saddle: closed orbits around the centers on both meridians
      for (double z0 : {0.15, 0.35, 0.55, 0.75, -0.15, -0.35, -0.55, -0.75})
        starts.push_back({0.5 * kPi, z0});
      starts.push_back({-0.5 * kPi, 0.55});
      starts.push_back({-0.5 * kPi, -0.55});
    }
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const auto path = integrate_trajectory(starts[i], p.tau_end, p.dtau);
      std::string out = "t,phi,z,energy\n";
      for (const auto& pt : path)
        out += cell(pt.tau) + ',' + cell(pt.state.phi) + ',' + cell(pt.state.z) + ',' +
               cell(mf_energy(pt.state)) + '\n';
      manifest.write_file("trajectory_" + std::to_string(i) + ".csv", out);
    }
  });
  manifest.finalize();
}

void run_approx(const ExperimentConfig& config) {
  RunManifest manifest("approx", config);
  const int n = config.n();
  const GaussianModel model = GaussianModel::for_particles(n);
  const auto times = make_time_grid(config.effective_t_max(n), config.samples);

  timed_stage(manifest, "write", [&] {
    std::string out = "chi_t,gauss_sx,gauss_xi2,gauss_FQ,gauss_valid,frozen_xi2,frozen_FQ\n";
    for (double t : times) {
      const GaussianResult g = gaussian_solution(model, t);
      const FrozenSpinPrediction f = frozen_spin_prediction(n, t);
      out += cell(t) + ',' + cell(g.s_x) + ',' + cell(g.xi2) + ',' + cell(g.f_q) + ',';
      out += g.within_validity ? '1' : '0';
      out += ',' + cell(f.xi2) + ',' + cell(f.fq) + '\n';
    }
    manifest.write_file("approx.csv", out);
  });
  manifest.finalize();
}

}  // namespace tact::cli
