#pragma once

#include "tact/types.hpp"

namespace tact {

// Product quadrature on the Bloch sphere: Gauss-Legendre in cos(theta) times
// a uniform phi grid starting at -pi. Weights sum to 4 pi; the defaults
// (n_theta = 2N+1, n_phi = 4N+4) oversample the 2S bandlimit so the
// normalization identities below hold to machine precision, keep an exact
// theta = pi/2 row and exact phi = +-pi/2 columns.
struct SphereGrid {
  VectorXd theta;         // ascending in theta
  VectorXd phi;
  VectorXd theta_weight;  // Gauss-Legendre weights, sum 2
  double phi_weight;      // 2 pi / n_phi

  int n_theta() const { return static_cast<int>(theta.size()); }
  int n_phi() const { return static_cast<int>(phi.size()); }
  double weight(int i, int) const { return theta_weight[i] * phi_weight; }
};

SphereGrid make_sphere_grid(int n_theta, int n_phi);
SphereGrid default_sphere_grid(int n_particles);

enum class MapKind { HUSIMI, WIGNER };

struct SphereMap {
  SphereGrid grid;
  MatrixXd values;  // n_theta x n_phi
  MapKind kind;
  double imag_residual = 0.0;  // max |Im| discarded from the Wigner sum

  double integral() const;         // quadrature of the values
  double integral_square() const;  // quadrature of values^2
};

/// Q(theta, phi) = |<theta, phi|psi>|^2; satisfies (N+1)/(4 pi) * integral = 1.
SphereMap husimi_map(const VectorXcd& psi, const SphereGrid& grid);

/// Multipoles rho_KQ = <psi| T_KQ^dag |psi> of the Agarwal tensors
/// T_KQ = sum_m (-1)^(S-m) <S,m+Q; S,-m | K,Q> |S,m+Q><S,m|, an orthonormal
/// operator basis. Pure states satisfy sum |rho_KQ|^2 = 1 and
/// rho_00 = 1/sqrt(N+1).
struct MultipoleCoefficients {
  int n_particles;
  MatrixXcd rho;  // (N+1) x (2N+1), column index Q + N

  Complex operator()(int k, int q) const { return rho(k, q + n_particles); }
  double parseval_sum() const { return rho.squaredNorm(); }
};

MultipoleCoefficients multipole_coefficients(const VectorXcd& psi);

/// W(theta, phi) = sum_KQ rho_KQ Y_KQ(theta, phi); real up to roundoff,
/// the discarded imaginary part is reported in imag_residual.
SphereMap wigner_map(const VectorXcd& psi, const SphereGrid& grid);

/// Clebsch-Gordan <j1 m1; j2 m2 | J M>, Condon-Shortley convention,
/// half-integer arguments allowed; selection-rule violations give 0.
double cg_coefficient(double j1, double m1, double j2, double m2, double J, double M);

enum class GreatCircle { MERIDIAN_YZ, EQUATOR };

/// Number of negative interference lobes of a Wigner map along a closed
/// great circle: half the sign changes, ignoring |W| below 1e-9 max|W|.
/// MERIDIAN_YZ walks the phi = +pi/2 column up and the phi = -pi/2 column
/// down; EQUATOR walks the theta = pi/2 row.
int fringe_count(const SphereMap& map, GreatCircle circle = GreatCircle::MERIDIAN_YZ);

/// Table of normalized associated Legendre values L(K, Q) for K, Q <= k_max
/// at x = cos(theta), such that Y_KQ(theta, phi) = L(K, Q) e^{i Q phi} for
/// Q >= 0 (Condon-Shortley phase included). Exposed for tests.
MatrixXd normalized_legendre_table(int k_max, double x);

}  // namespace tact
