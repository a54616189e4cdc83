// Structural invariant suite: algebra identities, unitarity, conservation,
// frame equivalence, and Clebsch-Gordan orthogonality in one fast target.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tact/dynamics.hpp"
#include "tact/metrology.hpp"
#include "tact/numeric.hpp"
#include "tact/phase_space.hpp"
#include "tact/spin.hpp"

using namespace tact;

TEST_CASE("commutator and Casimir identities") {
  for (int n : {1, 2, 5, 16, 51}) {
    const SpinMatrices s = build_spin_matrices(n);
    const double cas = 0.5 * n * (0.5 * n + 1.0);
    const MatrixXcd eye = MatrixXcd::Identity(s.dim(), s.dim());
    CHECK((s.sx * s.sy - s.sy * s.sx - kI * s.sz).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((s.sy * s.sz - s.sz * s.sy - kI * s.sx).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((s.sz * s.sx - s.sx * s.sz - kI * s.sy).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((s.sx * s.sx + s.sy * s.sy + s.sz * s.sz - cas * eye).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((s.sx - s.sx.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.sy - s.sy.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("unitarity of the evolution") {
  const int n = 60;
  const SpinMatrices s = build_spin_matrices(n);
  const Propagator prop(build_hamiltonian(s, HamiltonianKind::TACT_ROTATED));
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  VectorXcd psi(n + 1);
  for (int k = 0; k <= n; ++k) psi[k] = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  for (double t : linspace(0.0, 2.0, 101))
    CHECK(std::abs(prop.evolve(psi, t).norm() - 1.0) < 1e-10);
}

TEST_CASE("energy conservation") {
  const int n = 60;
  const SpinMatrices s = build_spin_matrices(n);
  for (auto kind : {HamiltonianKind::TACT_ORIGINAL, HamiltonianKind::TACT_ROTATED,
                    HamiltonianKind::TACT_EQUIVALENT, HamiltonianKind::OAT}) {
    const MatrixXcd h = build_hamiltonian(s, kind);
    const Propagator prop(h);
    const VectorXcd psi0 = coherent_state(1.2, 0.4, n);
    const double e0 = (psi0.adjoint() * h * psi0)(0).real();
    const double scale = prop.spectral_radius();
    for (double t : linspace(0.0, 1.0, 21)) {
      const VectorXcd psi = prop.evolve(psi0, t);
      const double e = (psi.adjoint() * h * psi)(0).real();
      CHECK(std::abs(e - e0) < 1e-9 * scale);
    }
  }
}

TEST_CASE("three TACT frames are one Hamiltonian") {
  const SpinMatrices s = build_spin_matrices(24);
  const MatrixXcd h_orig = build_hamiltonian(s, HamiltonianKind::TACT_ORIGINAL);
  const MatrixXcd h_rot = build_hamiltonian(s, HamiltonianKind::TACT_ROTATED);
  const MatrixXcd h_eq = build_hamiltonian(s, HamiltonianKind::TACT_EQUIVALENT);

  const MatrixXcd u1 = rotation_operator(s, Vector3d::UnitY(), 0.5 * kPi);
  CHECK((h_rot - u1 * h_orig * u1.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  const MatrixXcd u2 = rotation_operator(s, Vector3d::UnitY(), 0.5 * kPi) *
                       rotation_operator(s, Vector3d::UnitX(), -0.25 * kPi);
  CHECK((h_eq - u2 * h_rot * u2.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  // frame-independent metrology: same xi^2 and F_Q from matched initial states
  const VectorXcd x_state = coherent_state(0.5 * kPi, 0.0, 24);
  const Propagator rot(h_rot), orig(h_orig);
  const double t = 0.09;
  const SpinMoments m_rot = spin_moments(rot.evolve(x_state, t), s);
  const SpinMoments m_orig =
      spin_moments(u1 * orig.evolve(u1.adjoint() * x_state, t), s);
  CHECK(std::abs(squeezing_parameter(m_rot, 24) - squeezing_parameter(m_orig, 24)) < 1e-8);
  CHECK(std::abs(qfi_pure(m_rot).value - qfi_pure(m_orig).value) < 1e-8);
}

TEST_CASE("clebsch-gordan orthogonality") {
  for (double j : {1.0, 1.5, 2.5}) {
    const int twoj = static_cast<int>(2.0 * j);
    for (int twoJ = 0; twoJ <= 2 * twoj; twoJ += 2) {
      for (int twoJp = 0; twoJp <= 2 * twoj; twoJp += 2) {
        const double J = 0.5 * twoJ, Jp = 0.5 * twoJp;
        const double m_hi = std::min(J, Jp);
        for (double M = -m_hi; M <= m_hi + 0.1; M += 1.0) {
          double sum = 0.0;
          for (double m1 = -j; m1 <= j + 0.1; m1 += 1.0)
            sum += cg_coefficient(j, m1, j, M - m1, J, M) *
                   cg_coefficient(j, m1, j, M - m1, Jp, M);
          CHECK(std::abs(sum - (twoJ == twoJp ? 1.0 : 0.0)) < 1e-10);
        }
      }
    }
  }
}
