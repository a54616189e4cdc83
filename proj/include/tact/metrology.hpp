#pragma once

#include <optional>
#include <vector>

#include "tact/spin.hpp"
#include "tact/types.hpp"

namespace tact {

/// Mean spin vector and symmetrized covariance
/// cov_ij = (1/2)<S_i S_j + S_j S_i> - <S_i><S_j>.
struct SpinMoments {
  Vector3d mean;
  Matrix3d cov;
};

SpinMoments spin_moments(const VectorXcd& psi, const SpinMatrices& s);

/// xi^2 = N Var_min(S_perp) / |<S>|^2, minimized in closed form over the
/// plane orthogonal to the mean spin. Throws std::domain_error when
/// |mean| <= 1e-8 N (mean spin vanishes; xi^2 undefined).
double squeezing_parameter(const SpinMoments& m, int n_particles);

/// Transverse frame used by squeezing_parameter: e1 = normalize(z x mean)
/// (x-hat when mean is along z), e2 = normalize(mean) x e1.
std::pair<Vector3d, Vector3d> transverse_basis(const Vector3d& mean);

struct QfiResult {
  double value;        // F_Q = 4 max-eigenvalue of cov (pure states)
  Vector3d direction;  // optimal rotation axis (unit)
};

QfiResult qfi_pure(const SpinMoments& m);

enum class ReferenceKind { BW, EWSS, YURKE, TWIN_FOCK, NOON };

struct ReferenceState {
  ReferenceKind kind;
  int n_particles;
  double alpha;  // meaningful for YURKE only
  VectorXcd vector;
};

/// alpha is ignored except for YURKE. YURKE and TWIN_FOCK require even N.
ReferenceState reference_state(ReferenceKind kind, int n_particles, double alpha = 0.0);

/// Closed-form quantum Fisher information of the reference states.
double qfi_analytic(ReferenceKind kind, int n_particles, double alpha = 0.0);

/// |<ref| U psi>|^2. By default U = exp(-i (pi/2) Sx) for TWIN_FOCK and
/// YURKE references and the identity otherwise; pass pre_rotation to override.
double fidelity(const VectorXcd& psi, const ReferenceState& ref,
                const std::optional<MatrixXcd>& pre_rotation = std::nullopt);

/// Best alpha in [0, pi/2] (coarse grid + golden section to 1e-4 in alpha)
/// and the attained |<Y(alpha)|u>|^2 for an already pre-rotated state u.
std::pair<double, double> yurke_alpha_scan(const VectorXcd& rotated_psi, int n_particles);

struct YurkeOptimum {
  double alpha;
  double chi_t;
  double fidelity;
  std::size_t index;  // position of the best sample in the trajectory
};

/// Maximize |<Y(alpha)|psi_t>|^2 jointly over the sampled trajectory and
/// alpha in [0, pi/2] (coarse grid then golden-section to 1e-4 in alpha).
/// States are compared as given; apply any frame rotation before calling.
YurkeOptimum optimize_yurke_alpha(const std::vector<VectorXcd>& trajectory,
                                  const std::vector<double>& times, int n_particles);

/// P_k = |c_k|^2.
VectorXd fock_probabilities(const VectorXcd& psi);

}  // namespace tact
