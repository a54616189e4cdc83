#pragma once

#include <vector>

#include "tact/types.hpp"

namespace tact {

// Classical limit on the phase cylinder: relative phase phi in [-pi, pi),
// population imbalance z in [-1, 1]. Time is tau = N chi t throughout;
// rates therefore carry units of N*chi.
struct MeanFieldState {
  double phi = 0.0;
  double z = 0.0;
};

/// (dphi/dtau, dz/dtau). Throws std::domain_error at |z| = 1 (phase
/// undefined at pole).
Vector2d mf_rhs(const MeanFieldState& s);

/// Scaled energy H/(chi N^2/2) = -z sqrt(1-z^2) sin(phi); conserved by the flow.
double mf_energy(const MeanFieldState& s);

enum class FixedPointKind { SADDLE, CENTER };

struct FixedPoint {
  MeanFieldState location;
  FixedPointKind kind;
  Complex lambda_plus, lambda_minus;  // Jacobian eigenvalues, units N*chi
  // SADDLE: columns = unstable / stable eigendirections (real eigenvectors).
  // CENTER: columns = Re and Im of the +i*omega eigenvector (ellipse axes).
  Matrix2d vectors;
};

/// The six roots of the flow: saddles at (0,0), (pi,0) and centers at
/// (+-pi/2, +-1/sqrt 2), each Newton-polished and classified by its Jacobian.
std::vector<FixedPoint> find_fixed_points();

/// Analytic Jacobian of mf_rhs at s.
Matrix2d mf_jacobian(const MeanFieldState& s);

struct TrajectoryPoint {
  double tau;
  MeanFieldState state;
};

/// Fixed-step RK4. phi is left unwrapped so paths are continuous; throws
/// std::runtime_error if |z| reaches 1.
std::vector<TrajectoryPoint> integrate_trajectory(const MeanFieldState& s0,
                                                  double tau_end, double dtau);

// Second-moment (BBGKY-truncated) Gaussian model around the unstable point,
// with small parameter epsilon = 1/N, s_x(0) = 1/(2 sqrt(eps)) and internal
// time tau = chi t / sqrt(eps). Public interfaces take chi*t.
struct GaussianModel {
  double epsilon;

  double sx0() const { return 0.5 / std::sqrt(epsilon); }
  static GaussianModel for_particles(int n_particles);
};

struct GaussianResult {
  double s_x;
  double xi2;
  double f_q;
  bool within_validity;  // tau < 1; the closed forms assume tau << 1
};

GaussianResult gaussian_solution(const GaussianModel& model, double chi_t);

enum class BestTimeKind { SQUEEZING_MODEL, QFI_EMPIRICAL };

/// chi*t of best squeezing ln(2N)/(2N), or of the first QFI maximum
/// ln(2 pi N)/(2N) (empirical coefficients).
double best_time_estimates(int n_particles, BestTimeKind which);

struct GaussianAsymptotics {
  double xi2_best;  // e/(2N)
  double fq_best;   // (2/e) N^2
};

GaussianAsymptotics gaussian_asymptotics(int n_particles);

/// Harmonic (frozen-spin) closed forms around a stable fixed point,
/// omega = sqrt(2) N chi.
struct FrozenSpinPrediction {
  double xi2;  // 1 - sin^2(omega t)/2
  double fq;   // N (1 + sin^2(omega t))
};

FrozenSpinPrediction frozen_spin_prediction(int n_particles, double chi_t);

}  // namespace tact
