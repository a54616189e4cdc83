#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tact/dynamics.hpp"
#include "tact/metrology.hpp"
#include "tact/numeric.hpp"
#include "tact/phase_space.hpp"
#include "tact/spin.hpp"
#include "tact/sweep.hpp"

using namespace tact;

namespace {

// evolved state at the first QFI maximum, in the frame where the NOON-like
// superposition forms along +-x so its interference girdle is the phi = +-pi/2
// meridian
VectorXcd state_at_first_qfi_max(int n) {
  const SpinMatrices s = build_spin_matrices(n);
  const Propagator prop(build_hamiltonian(s, HamiltonianKind::TACT_ORIGINAL));
  const VectorXcd psi0 = coherent_state(0.0, 0.0, n);
  const auto times = make_time_grid(3.0 * std::log(2.0 * kPi * n) / (2.0 * n), 400);
  std::vector<double> fq(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    fq[i] = qfi_pure(spin_moments(prop.evolve(psi0, times[i]), s)).value;
  int idx = first_local_max(fq);
  if (idx < 0) idx = static_cast<int>(std::max_element(fq.begin(), fq.end()) - fq.begin());
  return prop.evolve(psi0, times[idx]);
}

}  // namespace

TEST_CASE("sphere grid") {
  const SphereGrid grid = default_sphere_grid(10);
  CHECK(grid.n_theta() == 21);
  CHECK(grid.n_phi() == 44);

  double total = 0.0;
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j) total += grid.weight(i, j);
  CHECK(total == doctest::Approx(4.0 * kPi).epsilon(1e-12));

  // exact equator row and +-pi/2 columns
  double best_theta = 1e9, best_phi_p = 1e9, best_phi_m = 1e9;
  for (int i = 0; i < grid.n_theta(); ++i)
    best_theta = std::min(best_theta, std::abs(grid.theta[i] - 0.5 * kPi));
  for (int j = 0; j < grid.n_phi(); ++j) {
    best_phi_p = std::min(best_phi_p, std::abs(grid.phi[j] - 0.5 * kPi));
    best_phi_m = std::min(best_phi_m, std::abs(grid.phi[j] + 0.5 * kPi));
  }
  CHECK(best_theta < 1e-12);
  CHECK(best_phi_p < 1e-12);
  CHECK(best_phi_m < 1e-12);

  CHECK_THROWS_AS(make_sphere_grid(0, 8), std::invalid_argument);
}

TEST_CASE("husimi map") {
  const int n = 12;
  const SphereGrid grid = default_sphere_grid(n);

  // peak sits on an exact grid node for theta = pi/2, phi = pi/2
  const SphereMap q = husimi_map(coherent_state(0.5 * kPi, 0.5 * kPi, n), grid);
  CHECK(q.kind == MapKind::HUSIMI);
  CHECK(q.values.minCoeff() >= 0.0);
  CHECK(q.values.maxCoeff() <= 1.0 + 1e-12);
  CHECK(q.values.maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));

  int i_max, j_max;
  q.values.maxCoeff(&i_max, &j_max);
  CHECK(std::abs(grid.theta[i_max] - 0.5 * kPi) < 1e-12);
  CHECK(std::abs(grid.phi[j_max] - 0.5 * kPi) < 1e-12);

  CHECK((n + 1.0) / (4.0 * kPi) * q.integral() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("husimi normalization for an evolved state") {
  const int n = 50;
  const VectorXcd psi = state_at_first_qfi_max(n);
  const SphereMap q = husimi_map(psi, default_sphere_grid(n));
  CHECK((n + 1.0) / (4.0 * kPi) * q.integral() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(q.values.minCoeff() >= 0.0);
}

TEST_CASE("clebsch-gordan") {
  CHECK(cg_coefficient(0.5, 0.5, 0.5, -0.5, 0.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cg_coefficient(1.0, 1.0, 1.0, -1.0, 0.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(cg_coefficient(1.0, 1.0, 1.0, 0.0, 1.0, 1.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  // selection rules give 0, not errors
  CHECK(cg_coefficient(1.0, 1.0, 1.0, 1.0, 0.0, 0.0) == 0.0);   // M != m1+m2
  CHECK(cg_coefficient(1.0, 0.0, 1.0, 0.0, 3.0, 0.0) == 0.0);   // triangle
  CHECK(cg_coefficient(1.0, 0.5, 1.0, -0.5, 0.0, 0.0) == 0.0);  // m-j parity

  CHECK_THROWS_AS(cg_coefficient(0.3, 0.3, 0.5, -0.5, 0.0, 0.0), std::invalid_argument);

  // orthogonality for j1 = j2 = 3/2
  const double j = 1.5;
  for (int twoJ = 0; twoJ <= 6; twoJ += 2) {
    for (int twoJp = 0; twoJp <= 6; twoJp += 2) {
      const double J = 0.5 * twoJ, Jp = 0.5 * twoJp;
      for (double M = -std::min(J, Jp); M <= std::min(J, Jp) + 0.1; M += 1.0) {
        double sum = 0.0;
        for (double m1 = -j; m1 <= j + 0.1; m1 += 1.0)
          sum += cg_coefficient(j, m1, j, M - m1, J, M) *
                 cg_coefficient(j, m1, j, M - m1, Jp, M);
        CHECK(std::abs(sum - (twoJ == twoJp ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("multipole coefficients") {
  const int n = 14;
  const VectorXcd psi = coherent_state(1.1, 0.7, n);
  const MultipoleCoefficients rho = multipole_coefficients(psi);
  CHECK(rho(0, 0).real() == doctest::Approx(1.0 / std::sqrt(n + 1.0)).epsilon(1e-12));
  CHECK(std::abs(rho(0, 0).imag()) < 1e-14);
  CHECK(rho.parseval_sum() == doctest::Approx(1.0).epsilon(1e-10));

  // rho_{K,-Q} = (-1)^Q conj(rho_{KQ})
  for (int k = 0; k <= n; ++k)
    for (int q = 0; q <= k; ++q) {
      const Complex a = rho(k, -q);
      const Complex b = (q % 2 == 0 ? 1.0 : -1.0) * std::conj(rho(k, q));
      CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("normalized legendre table against explicit harmonics") {
  const double x = 0.37;
  const double st = std::sqrt(1.0 - x * x);
  const MatrixXd table = normalized_legendre_table(3, x);
  CHECK(table(0, 0) == doctest::Approx(std::sqrt(1.0 / (4.0 * kPi))).epsilon(1e-13));
  CHECK(table(1, 0) == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * x).epsilon(1e-13));
  CHECK(table(1, 1) == doctest::Approx(-std::sqrt(3.0 / (8.0 * kPi)) * st).epsilon(1e-13));
  CHECK(table(2, 0) ==
        doctest::Approx(std::sqrt(5.0 / (16.0 * kPi)) * (3.0 * x * x - 1.0)).epsilon(1e-13));
  CHECK(table(2, 2) ==
        doctest::Approx(std::sqrt(15.0 / (32.0 * kPi)) * st * st).epsilon(1e-13));
}

TEST_CASE("wigner map identities") {
  const int n = 10;
  const SphereGrid grid = default_sphere_grid(n);

  // pole state: azimuthally symmetric
  const SphereMap w_pole = wigner_map(fock_state(n, n), grid);
  CHECK(w_pole.kind == MapKind::WIGNER);
  CHECK(w_pole.imag_residual < 1e-10);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const double lo = w_pole.values.row(i).minCoeff();
    const double hi = w_pole.values.row(i).maxCoeff();
    CHECK(hi - lo < 1e-10);
  }

  // Parseval: the map's L2 norm equals the multipole sum (= 1 for pure states)
  const VectorXcd psi = coherent_state(0.8, -0.9, n);
  const SphereMap w = wigner_map(psi, grid);
  CHECK(w.imag_residual < 1e-10);
  const MultipoleCoefficients rho = multipole_coefficients(psi);
  CHECK(w.integral_square() == doctest::Approx(rho.parseval_sum()).epsilon(1e-10));
  CHECK(w.integral_square() == doctest::Approx(1.0).epsilon(1e-10));

  // integral of W is fixed by the K=0 multipole alone
  CHECK(w.integral() ==
        doctest::Approx(std::sqrt(4.0 * kPi / (n + 1.0))).epsilon(1e-10));
}

TEST_CASE("wigner rotation covariance under exact phi shifts") {
  const int n = 10;
  const SphereGrid grid = default_sphere_grid(n);
  const VectorXcd psi = state_at_first_qfi_max(n);
  const SphereMap w = wigner_map(psi, grid);

  const int shift = 3;
  const double beta = 2.0 * kPi * shift / grid.n_phi();
  const SphereMap w_rot = wigner_map(rotate_state(psi, Vector3d::UnitZ(), beta), grid);
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j) {
      const int j_src = (j - shift + grid.n_phi()) % grid.n_phi();
      CHECK(std::abs(w_rot.values(i, j) - w.values(i, j_src)) < 1e-6);
    }
}

TEST_CASE("fringe counting") {
  const int n = 4;
  const SphereGrid grid = make_sphere_grid(41, 80);
  VectorXcd noon = VectorXcd::Zero(n + 1);
  noon[0] = noon[n] = 1.0 / std::sqrt(2.0);
  const SphereMap w_noon = wigner_map(noon, grid);
  CHECK(fringe_count(w_noon, GreatCircle::EQUATOR) == 4);

  const SphereMap q = husimi_map(noon, grid);
  CHECK_THROWS_AS(fringe_count(q), std::invalid_argument);

  // coherent state: no interference lobes along the yz meridian
  const int nc = 16;
  const SphereMap w_coh = wigner_map(coherent_state(0.5 * kPi, 0.0, nc), default_sphere_grid(nc));
  CHECK(fringe_count(w_coh, GreatCircle::MERIDIAN_YZ) == 0);

  // evolved state at the first QFI maximum: fringes ~ N
  const int ne = 20;
  const SphereMap w_ev = wigner_map(state_at_first_qfi_max(ne), default_sphere_grid(ne));
  CHECK(w_ev.values.minCoeff() < 0.0);
  const int fringes = fringe_count(w_ev, GreatCircle::MERIDIAN_YZ);
  CHECK(fringes >= ne - 2);
  CHECK(fringes <= ne + 2);
}

TEST_CASE("husimi positive where wigner goes negative") {
  const int n = 30;
  const VectorXcd psi = state_at_first_qfi_max(n);
  const SphereGrid grid = default_sphere_grid(n);
  CHECK(husimi_map(psi, grid).values.minCoeff() >= 0.0);
  CHECK(wigner_map(psi, grid).values.minCoeff() < 0.0);
}
