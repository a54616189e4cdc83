#include "tact/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "tact/numeric.hpp"

namespace tact {

static void require_unit_axis(const Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("axis must be a unit vector");
}

MatrixXcd SpinMatrices::along(const Vector3d& axis) const {
  require_unit_axis(axis);
  return axis.x() * sx + axis.y() * sy + axis.z() * sz;
}

SpinMatrices build_spin_matrices(int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  const int dim = n_particles + 1;
  MatrixXcd sp = MatrixXcd::Zero(dim, dim);
  MatrixXcd sz = MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    sz(k, k) = k - 0.5 * n_particles;
    if (k + 1 < dim)
      sp(k + 1, k) = std::sqrt(double(k + 1) * double(n_particles - k));
  }
  SpinMatrices s;
  s.n_particles = n_particles;
  s.sx = 0.5 * (sp + sp.adjoint());
  s.sy = -0.5 * kI * (sp - sp.adjoint());
  s.sz = std::move(sz);
  return s;
}

VectorXcd fock_state(int k, int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  if (k < 0 || k > n_particles)
    throw std::invalid_argument("fock index k outside 0..N");
  VectorXcd psi = VectorXcd::Zero(n_particles + 1);
  psi[k] = 1.0;
  return psi;
}

VectorXcd coherent_state(double theta, double phi, int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument("theta outside [0, pi]");
  if (!(phi >= -kPi && phi < kPi))
    throw std::invalid_argument("phi outside [-pi, pi)");

  const int n = n_particles;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  VectorXcd psi = VectorXcd::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    // c^k s^(N-k) in log space; a vanishing factor kills the amplitude.
    if ((c == 0.0 && k > 0) || (s == 0.0 && k < n)) continue;
    double lm = 0.5 * log_binomial(n, k);
    if (k > 0) lm += k * std::log(c);
    if (k < n) lm += (n - k) * std::log(s);
    psi[k] = std::polar(std::exp(lm), (n - k) * phi);
  }
  psi.normalize();
  return psi;
}

MatrixXcd rotation_operator(const SpinMatrices& s, const Vector3d& axis, double angle) {
  const MatrixXcd sn = s.along(axis);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sn);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed in rotation_operator");
  const VectorXd lam = es.eigenvalues();
  VectorXcd phase(lam.size());
  for (int i = 0; i < lam.size(); ++i)
    phase[i] = std::exp(-kI * (angle * lam[i]));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

VectorXcd rotate_state(const VectorXcd& psi, const Vector3d& axis, double angle) {
  const SpinMatrices s = build_spin_matrices(particle_count(psi));
  return rotation_operator(s, axis, angle) * psi;
}

int particle_count(const VectorXcd& psi) {
  if (psi.size() < 2)
    throw std::invalid_argument("state vector must have dimension N+1 >= 2");
  return static_cast<int>(psi.size()) - 1;
}

void require_normalized(const VectorXcd& psi, double tol) {
  const double err = std::abs(psi.squaredNorm() - 1.0);
  if (err > tol)
    throw std::invalid_argument("state vector not normalized (|norm^2 - 1| = " +
                                std::to_string(err) + ")");
}

}  // namespace tact
