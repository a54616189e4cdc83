#include "tact/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace tact {

MatrixXcd build_hamiltonian(const SpinMatrices& s, HamiltonianKind kind, double chi) {
  switch (kind) {
    case HamiltonianKind::TACT_ORIGINAL: {
      const MatrixXcd sp = s.splus();
      const MatrixXcd sm = s.sminus();
      return (chi / (2.0 * kI)) * (sp * sp - sm * sm);
    }
    case HamiltonianKind::TACT_ROTATED:
      return -chi * (s.sy * s.sz + s.sz * s.sy);
    case HamiltonianKind::TACT_EQUIVALENT:
      return chi * (s.sx * s.sx - s.sy * s.sy);
    case HamiltonianKind::OAT:
      return chi * (s.sz * s.sz);
  }
  throw std::invalid_argument("unknown HamiltonianKind");
}

Propagator::Propagator(const MatrixXcd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("hamiltonian must be square");
  const double scale = hamiltonian.cwiseAbs().maxCoeff();
  const double herm_err = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-10 * (1.0 + scale))
    throw std::invalid_argument("hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hamiltonian);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed in Propagator");
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

VectorXcd Propagator::evolve(const VectorXcd& psi0, double t) const {
  if (psi0.size() != evals_.size())
    throw std::invalid_argument("state dimension does not match hamiltonian");
  VectorXcd w = evecs_.adjoint() * psi0;
  for (int i = 0; i < w.size(); ++i) w[i] *= std::exp(-kI * (evals_[i] * t));
  return evecs_ * w;
}

std::vector<VectorXcd> Propagator::trajectory(const VectorXcd& psi0,
                                              const std::vector<double>& times) const {
  if (psi0.size() != evals_.size())
    throw std::invalid_argument("state dimension does not match hamiltonian");
  const VectorXcd w0 = evecs_.adjoint() * psi0;
  std::vector<VectorXcd> out;
  out.reserve(times.size());
  VectorXcd w(w0.size());
  for (double t : times) {
    for (int i = 0; i < w.size(); ++i) w[i] = w0[i] * std::exp(-kI * (evals_[i] * t));
    out.push_back(evecs_ * w);
  }
  return out;
}

double Propagator::spectral_radius() const {
  return evals_.cwiseAbs().maxCoeff();
}

}  // namespace tact
