#include "tact/phase_space.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tact/numeric.hpp"
#include "tact/spin.hpp"

namespace tact {

SphereGrid make_sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("grid sizes must be positive");
  auto [x, w] = gauss_legendre(n_theta);
  SphereGrid g;
  g.theta.resize(n_theta);
  g.theta_weight.resize(n_theta);
  // Gauss-Legendre nodes ascend in x = cos(theta); flip so theta ascends.
  for (int i = 0; i < n_theta; ++i) {
    g.theta[i] = std::acos(x[n_theta - 1 - i]);
    g.theta_weight[i] = w[n_theta - 1 - i];
  }
  g.phi.resize(n_phi);
  g.phi_weight = 2.0 * kPi / n_phi;
  for (int j = 0; j < n_phi; ++j) g.phi[j] = -kPi + g.phi_weight * j;
  return g;
}

SphereGrid default_sphere_grid(int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  return make_sphere_grid(2 * n_particles + 1, 4 * n_particles + 4);
}

double SphereMap::integral() const {
  return grid.phi_weight * (grid.theta_weight.transpose() * values).sum();
}

double SphereMap::integral_square() const {
  return grid.phi_weight *
         (grid.theta_weight.transpose() * values.cwiseAbs2()).sum();
}

SphereMap husimi_map(const VectorXcd& psi, const SphereGrid& grid) {
  const int n = particle_count(psi);
  SphereMap map{grid, MatrixXd(grid.n_theta(), grid.n_phi()), MapKind::HUSIMI};
  VectorXcd d(n + 1);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const double c = std::cos(0.5 * grid.theta[i]);
    const double s = std::sin(0.5 * grid.theta[i]);
    // coherent-state amplitude profile at this latitude times psi
    for (int k = 0; k <= n; ++k) {
      double lm = 0.5 * log_binomial(n, k);
      if (k > 0) lm += k * std::log(c);
      if (k < n) lm += (n - k) * std::log(s);
      d[k] = std::exp(lm) * psi[k];
    }
    for (int j = 0; j < grid.n_phi(); ++j) {
      // <theta,phi|psi> = sum_k d_k e^{-i(N-k)phi}
      const Complex step = std::exp(kI * grid.phi[j]);
      Complex phase = std::exp(-kI * (double(n) * grid.phi[j]));
      Complex acc = 0.0;
      for (int k = 0; k <= n; ++k) {
        acc += d[k] * phase;
        phase *= step;
      }
      map.values(i, j) = std::norm(acc);
    }
  }
  return map;
}

double cg_coefficient(double j1, double m1, double j2, double m2, double J, double M) {
  auto doubled = [](double v, const char* name) {
    const double two = 2.0 * v;
    const long r = std::lround(two);
    if (std::abs(two - r) > 1e-9)
      throw std::invalid_argument(std::string(name) + " must be half-integer");
    return r;
  };
  const long a = doubled(j1, "j1"), al = doubled(m1, "m1");
  const long b = doubled(j2, "j2"), be = doubled(m2, "m2");
  const long c = doubled(J, "J"), ga = doubled(M, "M");

  // selection rules: 0 by convention
  if (al + be != ga) return 0.0;
  if (std::abs(al) > a || std::abs(be) > b || std::abs(ga) > c) return 0.0;
  if (c < std::abs(a - b) || c > a + b) return 0.0;
  if ((a + al) % 2 != 0 || (b + be) % 2 != 0 || (c + ga) % 2 != 0) return 0.0;
  if ((a + b + c) % 2 != 0) return 0.0;

  // all of these are genuine integers (doubled values are even)
  auto lf = [](long twice) { return log_factorial(static_cast<int>(twice / 2)); };
  const double pref =
      0.5 * (std::log(c + 1.0) + lf(a + b - c) + lf(a - b + c) + lf(-a + b + c) -
             lf(a + b + c + 2) + lf(a + al) + lf(a - al) + lf(b + be) + lf(b - be) +
             lf(c + ga) + lf(c - ga));

  // Racah sum over t (doubled bookkeeping: all entries even)
  const long t_min = std::max({0L, b - c - al, a - c + be});
  const long t_max = std::min({a + b - c, a - al, b + be});
  double sum = 0.0;
  for (long t = t_min; t <= t_max; t += 2) {
    const double lt = lf(t) + lf(a + b - c - t) + lf(a - al - t) + lf(b + be - t) +
                      lf(c - b + al + t) + lf(c - a - be + t);
    const double term = std::exp(pref - lt);
    sum += (t / 2) % 2 == 0 ? term : -term;
  }
  return sum;
}

MultipoleCoefficients multipole_coefficients(const VectorXcd& psi) {
  const int n = particle_count(psi);
  const double s = 0.5 * n;
  MultipoleCoefficients mc{n, MatrixXcd::Zero(n + 1, 2 * n + 1)};
  for (int k = 0; k <= n; ++k) {
    for (int q = 0; q <= k; ++q) {
      // <T_KQ> = sum_m (-1)^(S-m) <S,m+Q;S,-m|K,Q> conj(psi_{m+Q}) psi_m.
      // No sqrt(2K+1) here: that factor belongs to the 3j form of the
      // tensors; with Clebsch-Gordan coefficients the columns are already
      // orthonormal (Tr T_KQ^dag T_K'Q' = delta), which is what makes
      // sum |rho_KQ|^2 = 1 and the spherical Parseval identity hold.
      Complex acc = 0.0;
      for (int i = 0; i + q <= n; ++i) {
        const double m = i - s;
        const double cg = cg_coefficient(s, m + q, s, -m, k, q);
        if (cg == 0.0) continue;
        const double sign = (n - i) % 2 == 0 ? 1.0 : -1.0;  // (-1)^(S-m)
        acc += sign * cg * std::conj(psi[i + q]) * psi[i];
      }
      const Complex rho = std::conj(acc);
      mc.rho(k, q + n) = rho;
      mc.rho(k, -q + n) = (q % 2 == 0 ? 1.0 : -1.0) * std::conj(rho);
    }
  }
  return mc;
}

MatrixXd normalized_legendre_table(int k_max, double x) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  if (std::abs(x) > 1.0) throw std::invalid_argument("x must lie in [-1, 1]");
  const double sx = std::sqrt(1.0 - x * x);
  MatrixXd t = MatrixXd::Zero(k_max + 1, k_max + 1);
  t(0, 0) = std::sqrt(1.0 / (4.0 * kPi));
  for (int q = 1; q <= k_max; ++q)
    t(q, q) = -std::sqrt((2.0 * q + 1.0) / (2.0 * q)) * sx * t(q - 1, q - 1);
  for (int q = 0; q < k_max; ++q)
    t(q + 1, q) = x * std::sqrt(2.0 * q + 3.0) * t(q, q);
  for (int q = 0; q <= k_max; ++q)
    for (int k = q + 2; k <= k_max; ++k) {
      const double ak = std::sqrt((4.0 * k * k - 1.0) / (double(k) * k - double(q) * q));
      const double bk = std::sqrt(((k - 1.0) * (k - 1.0) - double(q) * q) /
                                  (4.0 * (k - 1.0) * (k - 1.0) - 1.0));
      t(k, q) = ak * (x * t(k - 1, q) - bk * t(k - 2, q));
    }
  return t;
}

SphereMap wigner_map(const VectorXcd& psi, const SphereGrid& grid) {
  const int n = particle_count(psi);
  const MultipoleCoefficients mc = multipole_coefficients(psi);
  SphereMap map{grid, MatrixXd(grid.n_theta(), grid.n_phi()), MapKind::WIGNER};
  map.imag_residual = 0.0;

  VectorXcd inner(2 * n + 1);  // sum_K rho_KQ N_K^Q(x) at fixed theta, index Q+n
  for (int i = 0; i < grid.n_theta(); ++i) {
    const MatrixXd leg = normalized_legendre_table(n, std::cos(grid.theta[i]));
    for (int q = -n; q <= n; ++q) {
      Complex acc = 0.0;
      const int aq = std::abs(q);
      // N_K^{-Q} = (-1)^Q N_K^Q
      const double qsign = (q >= 0 || q % 2 == 0) ? 1.0 : -1.0;
      for (int k = aq; k <= n; ++k) acc += mc(k, q) * (qsign * leg(k, aq));
      inner[q + n] = acc;
    }
    for (int j = 0; j < grid.n_phi(); ++j) {
      const Complex step = std::exp(kI * grid.phi[j]);
      Complex phase = std::exp(-kI * (double(n) * grid.phi[j]));  // e^{iQ phi}, Q from -n
      Complex acc = 0.0;
      for (int q = -n; q <= n; ++q) {
        acc += inner[q + n] * phase;
        phase *= step;
      }
      map.values(i, j) = acc.real();
      map.imag_residual = std::max(map.imag_residual, std::abs(acc.imag()));
    }
  }
  return map;
}

int fringe_count(const SphereMap& map, GreatCircle circle) {
  if (map.kind != MapKind::WIGNER)
    throw std::invalid_argument("fringe_count requires a WIGNER map");
  const SphereGrid& g = map.grid;

  auto exact_index = [](const VectorXd& nodes, double target, const char* what) {
    int best = 0;
    for (int i = 1; i < nodes.size(); ++i)
      if (std::abs(nodes[i] - target) < std::abs(nodes[best] - target)) best = i;
    if (std::abs(nodes[best] - target) > 1e-9)
      throw std::invalid_argument(std::string("grid lacks an exact ") + what + " node");
    return best;
  };

  std::vector<double> loop;
  if (circle == GreatCircle::MERIDIAN_YZ) {
    const int jp = exact_index(g.phi, 0.5 * kPi, "phi = +pi/2");
    const int jm = exact_index(g.phi, -0.5 * kPi, "phi = -pi/2");
    for (int i = 0; i < g.n_theta(); ++i) loop.push_back(map.values(i, jp));
    for (int i = g.n_theta() - 1; i >= 0; --i) loop.push_back(map.values(i, jm));
  } else {
    const int ie = exact_index(g.theta, 0.5 * kPi, "theta = pi/2");
    for (int j = 0; j < g.n_phi(); ++j) loop.push_back(map.values(ie, j));
  }

  double peak = 0.0;
  for (double v : loop) peak = std::max(peak, std::abs(v));
  const double floor = 1e-9 * peak;

  int changes = 0;
  int last_sign = 0;
  int first_sign = 0;
  for (double v : loop) {
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    if (first_sign == 0) first_sign = sign;
    last_sign = sign;
  }
  if (first_sign != 0 && last_sign != first_sign) ++changes;  // close the loop
  return changes / 2;
}

}  // namespace tact
