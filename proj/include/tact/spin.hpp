#pragma once

#include "tact/types.hpp"

namespace tact {

// Collective spin S = N/2 of N spin-1/2 particles in the two-mode Fock basis
// |k, N-k>, k = 0..N counting the occupation of mode a. Sz is diagonal with
// entries k - N/2; the raising operator a^dag b sends k to k+1 with matrix
// element sqrt((k+1)(N-k)).
struct SpinMatrices {
  int n_particles = 0;
  MatrixXcd sx, sy, sz;

  int dim() const { return n_particles + 1; }
  MatrixXcd splus() const { return sx + kI * sy; }
  MatrixXcd sminus() const { return sx - kI * sy; }
  /// Spin component along a unit Bloch direction.
  MatrixXcd along(const Vector3d& axis) const;
};

SpinMatrices build_spin_matrices(int n_particles);

/// Basis vector |k, N-k>.
VectorXcd fock_state(int k, int n_particles);

/// Spin coherent state, c_k = C(N,k)^{1/2} cos(theta/2)^k (sin(theta/2) e^{i phi})^{N-k}.
/// Points along (sin theta cos phi, sin theta sin phi, cos theta); theta = 0 is |N,0>.
/// Amplitudes accumulate in log space so N up to 1e4 stays finite.
VectorXcd coherent_state(double theta, double phi, int n_particles);

/// exp(-i angle S_axis) psi via exact eigendecomposition of S_axis.
VectorXcd rotate_state(const VectorXcd& psi, const Vector3d& axis, double angle);

/// Unitary exp(-i angle S_axis) as a dense matrix.
MatrixXcd rotation_operator(const SpinMatrices& s, const Vector3d& axis, double angle);

/// N recovered from an amplitude vector (dimension N+1).
int particle_count(const VectorXcd& psi);

/// Throws unless the amplitudes are normalized within tol.
void require_normalized(const VectorXcd& psi, double tol = 1e-10);

}  // namespace tact
