#pragma once

#include <vector>

#include "tact/spin.hpp"
#include "tact/types.hpp"

namespace tact {

// Collective-spin Hamiltonians, hbar = 1, time measured as the dimensionless
// chi*t. All four are quadratic in the spin components:
//   TACT_ORIGINAL   (chi/2i)(S+^2 - S-^2)
//   TACT_ROTATED    -chi (Sy Sz + Sz Sy)   (frame rotated by exp(-i pi/2 Sy))
//   TACT_EQUIVALENT chi (Sx^2 - Sy^2)
//   OAT             chi Sz^2               (one-axis twisting, for comparison)
enum class HamiltonianKind { TACT_ORIGINAL, TACT_ROTATED, TACT_EQUIVALENT, OAT };

MatrixXcd build_hamiltonian(const SpinMatrices& s, HamiltonianKind kind, double chi = 1.0);

/// Exact propagator from one dense Hermitian eigendecomposition;
/// evolve() then costs two matrix-vector products per time.
class Propagator {
 public:
  explicit Propagator(const MatrixXcd& hamiltonian);

  VectorXcd evolve(const VectorXcd& psi0, double t) const;
  /// psi(t) for every t in times, reusing the rotated initial state.
  std::vector<VectorXcd> trajectory(const VectorXcd& psi0, const std::vector<double>& times) const;

  const VectorXd& eigenvalues() const { return evals_; }
  const MatrixXcd& eigenvectors() const { return evecs_; }
  /// max |eigenvalue|; the natural scale for energy-conservation checks.
  double spectral_radius() const;

 private:
  VectorXd evals_;
  MatrixXcd evecs_;
};

}  // namespace tact
