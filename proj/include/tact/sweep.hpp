#pragma once

#include <array>
#include <vector>

#include "tact/dynamics.hpp"
#include "tact/metrology.hpp"
#include "tact/spin.hpp"
#include "tact/types.hpp"

namespace tact {

/// One row of the observable sweep; quantities that are undefined at a
/// given time or N (vanishing mean spin, odd-N references) are NaN.
struct ObservableRow {
  double chi_t;
  double xi2;
  double fq;
  Vector3d mean;
  double var_sy, var_sz;
  double fid_bw, fid_ewss, fid_y, fid_tf, fid_noon;
  double yurke_alpha;  // per-time optimal alpha behind fid_y
};

struct SweepOptions {
  bool with_fidelities = true;
};

struct SweepResult {
  int n_particles;
  std::vector<ObservableRow> rows;
};

SweepResult sweep_observables(const Propagator& prop, const SpinMatrices& s,
                              const VectorXcd& psi0, const std::vector<double>& times,
                              const SweepOptions& options = {});

// The eight labeled event times of an unstable-point run:
//   A initial time, B max BW fidelity, C max EWSS fidelity, D best squeezing,
//   E max Yurke fidelity, F max QFI, G max twin-Fock fidelity,
//   H second local minimum of the QFI.
enum class EventLabel { A, B, C, D, E, F, G, H };

struct Event {
  EventLabel label;
  double chi_t;
  double value;     // refined observable value at chi_t
  double residual;  // |refined time - best grid time|
};

/// Locates all eight events on the sweep grid and parabolically refines each
/// against the continuous evolution. Throws std::runtime_error
/// ("event H not bracketed", etc.) when the window misses one.
std::array<Event, 8> locate_events(const Propagator& prop, const SpinMatrices& s,
                                   const VectorXcd& psi0, const SweepResult& sweep);

/// Uniform chi*t grid from 0 to t_max inclusive.
std::vector<double> make_time_grid(double t_max, int samples);

}  // namespace tact
