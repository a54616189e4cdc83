#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tact/dynamics.hpp"
#include "tact/numeric.hpp"
#include "tact/spin.hpp"

using namespace tact;

namespace {

std::vector<double> sorted_eigs(const MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> e(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("hamiltonian forms and their unitary relations") {
  const SpinMatrices s = build_spin_matrices(10);
  const MatrixXcd h_orig = build_hamiltonian(s, HamiltonianKind::TACT_ORIGINAL);
  const MatrixXcd h_rot = build_hamiltonian(s, HamiltonianKind::TACT_ROTATED);
  const MatrixXcd h_eq = build_hamiltonian(s, HamiltonianKind::TACT_EQUIVALENT);

  // the frame change exp(-i pi/2 Sy) maps the +/- form onto -(SySz+SzSy)
  const MatrixXcd u = rotation_operator(s, Vector3d::UnitY(), 0.5 * kPi);
  CHECK((h_rot - u * h_orig * u.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  // (Sx^2 - Sy^2) frame: exp(-i pi/2 Sy) exp(+i pi/4 Sx). The x rotation must
  // be by -pi/4 (not +pi/4, which lands on the negated Hamiltonian).
  const MatrixXcd u2 = rotation_operator(s, Vector3d::UnitY(), 0.5 * kPi) *
                       rotation_operator(s, Vector3d::UnitX(), -0.25 * kPi);
  CHECK((h_eq - u2 * h_rot * u2.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  // all three isospectral
  const auto e1 = sorted_eigs(h_orig), e2 = sorted_eigs(h_rot), e3 = sorted_eigs(h_eq);
  for (std::size_t i = 0; i < e1.size(); ++i) {
    CHECK(std::abs(e1[i] - e2[i]) < 1e-10);
    CHECK(std::abs(e1[i] - e3[i]) < 1e-10);
  }

  // +/- E pairs
  for (std::size_t i = 0; i < e1.size(); ++i)
    CHECK(std::abs(e1[i] + e1[e1.size() - 1 - i]) < 1e-10);

  // explicit matrix identities
  const MatrixXcd sp = s.splus(), sm = s.sminus();
  CHECK((h_orig - (sp * sp - sm * sm) / (2.0 * kI)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h_rot + (s.sy * s.sz + s.sz * s.sy)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((h_eq - (s.sx * s.sx - s.sy * s.sy)).cwiseAbs().maxCoeff() < 1e-12);
  const MatrixXcd oat = build_hamiltonian(s, HamiltonianKind::OAT, 0.5);
  CHECK((oat - 0.5 * s.sz * s.sz).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagator diagonalization") {
  const SpinMatrices s = build_spin_matrices(2);
  const Propagator prop(s.sz);
  CHECK(prop.eigenvalues().size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(prop.eigenvalues()[i] == doctest::Approx(i - 1.0).epsilon(1e-12));
  CHECK(prop.spectral_radius() == doctest::Approx(1.0));

  // reconstruction and unitarity of the eigenvector matrix
  const SpinMatrices s10 = build_spin_matrices(10);
  const MatrixXcd h = build_hamiltonian(s10, HamiltonianKind::TACT_ROTATED);
  const Propagator p10(h);
  const MatrixXcd v = p10.eigenvectors();
  CHECK((v * v.adjoint() - MatrixXcd::Identity(11, 11)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((v * p10.eigenvalues().asDiagonal() * v.adjoint() - h).cwiseAbs().maxCoeff() < 1e-10);

  MatrixXcd bad = h;
  bad(0, 1) += Complex(0.0, 1e-3);
  CHECK_THROWS_AS(Propagator{bad}, std::invalid_argument);
}

TEST_CASE("evolution basics") {
  const SpinMatrices s = build_spin_matrices(12);
  const Propagator prop(build_hamiltonian(s, HamiltonianKind::TACT_ROTATED));
  const VectorXcd psi0 = coherent_state(0.5 * kPi, 0.0, 12);

  CHECK((prop.evolve(psi0, 0.0) - psi0).norm() < 1e-14);

  // the unstable start sits on the H=0 energy contour
  const MatrixXcd h = build_hamiltonian(s, HamiltonianKind::TACT_ROTATED);
  CHECK(std::abs((psi0.adjoint() * h * psi0)(0)) < 1e-12);

  // group property
  const VectorXcd one = prop.evolve(psi0, 0.02);
  const VectorXcd two = prop.evolve(prop.evolve(psi0, 0.01), 0.01);
  CHECK((one - two).norm() < 1e-10);

  // energy conservation along a long evolution
  const VectorXcd late = prop.evolve(psi0, 5.0);
  const Complex e0 = (psi0.adjoint() * h * psi0)(0);
  const Complex e1 = (late.adjoint() * h * late)(0);
  CHECK(std::abs(e1 - e0) < 1e-9 * (1.0 + prop.spectral_radius()));
  CHECK(std::abs(late.norm() - 1.0) < 1e-12);
}

TEST_CASE("short-step Taylor oracle") {
  const int n = 10;
  const SpinMatrices s = build_spin_matrices(n);
  const MatrixXcd h = build_hamiltonian(s, HamiltonianKind::TACT_ROTATED);
  const Propagator prop(h);
  const VectorXcd psi0 = coherent_state(0.5 * kPi, 0.0, n);
  const double dt = 1e-4;

  VectorXcd taylor = psi0, term = psi0;
  for (int j = 1; j <= 4; ++j) {
    term = (-kI * dt / static_cast<double>(j)) * (h * term);
    taylor += term;
  }
  CHECK((prop.evolve(psi0, dt) - taylor).norm() < 1e-13);
}

TEST_CASE("trajectory") {
  const SpinMatrices s = build_spin_matrices(50);
  const Propagator prop(build_hamiltonian(s, HamiltonianKind::TACT_ROTATED));
  const VectorXcd psi0 = coherent_state(0.5 * kPi, 0.0, 50);

  const auto single = prop.trajectory(psi0, {0.0});
  CHECK(single.size() == 1);
  CHECK((single[0] - psi0).norm() < 1e-14);

  const auto pair = prop.trajectory(psi0, {0.0, 0.07});
  CHECK((pair[1] - prop.evolve(psi0, 0.07)).norm() < 1e-12);

  const auto times = linspace(0.0, 0.2, 1000);
  const auto traj = prop.trajectory(psi0, times);
  for (const auto& psi : traj) CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
}

TEST_CASE("rotated-frame dynamics give frame-independent observables") {
  // evolving the rotated state under the original Hamiltonian must produce
  // the same invariants as the rotated Hamiltonian acting on |N,0>_x
  const int n = 14;
  const SpinMatrices s = build_spin_matrices(n);
  const MatrixXcd u = rotation_operator(s, Vector3d::UnitY(), 0.5 * kPi);

  const VectorXcd x_state = coherent_state(0.5 * kPi, 0.0, n);
  const Propagator rot(build_hamiltonian(s, HamiltonianKind::TACT_ROTATED));
  const Propagator orig(build_hamiltonian(s, HamiltonianKind::TACT_ORIGINAL));

  const double t = 0.11;
  const VectorXcd a = rot.evolve(x_state, t);
  const VectorXcd b = u * orig.evolve(u.adjoint() * x_state, t);
  CHECK(std::abs(std::abs(a.dot(b)) - 1.0) < 1e-10);
}
