#include "tact/mean_field.hpp"

#include <cmath>
#include <stdexcept>

namespace tact {

Vector2d mf_rhs(const MeanFieldState& s) {
  if (std::abs(s.z) >= 1.0)
    throw std::domain_error("phase undefined at pole");
  const double root = std::sqrt(1.0 - s.z * s.z);
  return {-(1.0 - 2.0 * s.z * s.z) / root * std::sin(s.phi),
          s.z * root * std::cos(s.phi)};
}

double mf_energy(const MeanFieldState& s) {
  return -s.z * std::sqrt(1.0 - s.z * s.z) * std::sin(s.phi);
}

Matrix2d mf_jacobian(const MeanFieldState& s) {
  if (std::abs(s.z) >= 1.0)
    throw std::domain_error("phase undefined at pole");
  const double z = s.z;
  const double root = std::sqrt(1.0 - z * z);
  const double g = (1.0 - 2.0 * z * z) / root;
  const double gp = z * (2.0 * z * z - 3.0) / (root * root * root);
  Matrix2d j;
  j << -g * std::cos(s.phi), -gp * std::sin(s.phi),
      -z * root * std::sin(s.phi), g * std::cos(s.phi);
  return j;
}

static MeanFieldState newton_polish(MeanFieldState s) {
  for (int it = 0; it < 50; ++it) {
    const Vector2d f = mf_rhs(s);
    if (f.norm() < 1e-14) break;
    const Vector2d step = mf_jacobian(s).fullPivLu().solve(f);
    s.phi -= step[0];
    s.z -= step[1];
  }
  return s;
}

static FixedPoint classify(const MeanFieldState& loc) {
  const Matrix2d j = mf_jacobian(loc);
  const double tr = j.trace();
  const double det = j.determinant();
  const double disc = tr * tr - 4.0 * det;
  FixedPoint fp;
  fp.location = loc;
  if (disc > 0.0) {  // real pair; saddle when det < 0
    if (det >= 0.0) throw std::runtime_error("unexpected node fixed point");
    const double lp = 0.5 * (tr + std::sqrt(disc));
    const double lm = 0.5 * (tr - std::sqrt(disc));
    fp.kind = FixedPointKind::SADDLE;
    fp.lambda_plus = lp;
    fp.lambda_minus = lm;
    auto eigvec = [&](double lam) {
      Vector2d v(j(0, 1), lam - j(0, 0));
      if (v.norm() < 1e-12) v = Vector2d(lam - j(1, 1), j(1, 0));
      return v.normalized();
    };
    fp.vectors.col(0) = eigvec(lp);
    fp.vectors.col(1) = eigvec(lm);
  } else {
    if (std::abs(0.5 * tr) >= 1e-10)
      throw std::runtime_error("unexpected spiral fixed point");
    const double omega = 0.5 * std::sqrt(-disc);
    fp.kind = FixedPointKind::CENTER;
    fp.lambda_plus = Complex(0.0, omega);
    fp.lambda_minus = Complex(0.0, -omega);
    // (J - i omega) v = 0 with v = (J01, i omega - J00): real/imag columns
    Vector2d re(j(0, 1), -j(0, 0));
    Vector2d im(0.0, omega);
    const double scale = std::sqrt(re.squaredNorm() + im.squaredNorm());
    fp.vectors.col(0) = re / scale;
    fp.vectors.col(1) = im / scale;
  }
  return fp;
}

std::vector<FixedPoint> find_fixed_points() {
  const double r = 1.0 / std::sqrt(2.0);
  const MeanFieldState seeds[6] = {{0.0, 0.0},      {kPi, 0.0},     {0.5 * kPi, r},
                                   {0.5 * kPi, -r}, {-0.5 * kPi, r}, {-0.5 * kPi, -r}};
  std::vector<FixedPoint> out;
  out.reserve(6);
  for (const auto& seed : seeds) out.push_back(classify(newton_polish(seed)));
  return out;
}

std::vector<TrajectoryPoint> integrate_trajectory(const MeanFieldState& s0,
                                                  double tau_end, double dtau) {
  if (std::abs(s0.z) >= 1.0)
    throw std::invalid_argument("initial |z| must be < 1");
  if (tau_end <= 0.0 || dtau <= 0.0)
    throw std::invalid_argument("tau_end and dtau must be positive");

  auto rhs = [](const MeanFieldState& s) {
    if (std::abs(s.z) > 1.0 - 1e-12)
      throw std::runtime_error("trajectory crossed pole");
    return mf_rhs(s);
  };

  std::vector<TrajectoryPoint> path;
  const int n_steps = static_cast<int>(std::ceil(tau_end / dtau - 1e-12));
  path.reserve(n_steps + 1);
  MeanFieldState s = s0;
  double tau = 0.0;
  path.push_back({tau, s});
  for (int i = 0; i < n_steps; ++i) {
    const double h = std::min(dtau, tau_end - tau);
    const Vector2d k1 = rhs(s);
    const Vector2d k2 = rhs({s.phi + 0.5 * h * k1[0], s.z + 0.5 * h * k1[1]});
    const Vector2d k3 = rhs({s.phi + 0.5 * h * k2[0], s.z + 0.5 * h * k2[1]});
    const Vector2d k4 = rhs({s.phi + h * k3[0], s.z + h * k3[1]});
    s.phi += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    s.z += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    tau += h;
    path.push_back({tau, s});
  }
  return path;
}

GaussianModel GaussianModel::for_particles(int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  return {1.0 / n_particles};
}

GaussianResult gaussian_solution(const GaussianModel& model, double chi_t) {
  if (model.epsilon <= 0.0 || model.epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (chi_t < 0.0) throw std::invalid_argument("chi_t must be >= 0");
  const double s0 = model.sx0();
  const double tau = chi_t / std::sqrt(model.epsilon);
  const double u = 4.0 * s0 * tau;
  GaussianResult r;
  r.s_x = s0 - (std::cosh(u) - 1.0) / (4.0 * s0);
  const double expo = -u + (std::sinh(u) - tau) / (4.0 * s0 * s0);
  r.xi2 = std::exp(expo);
  r.f_q = std::exp(-expo) / model.epsilon;
  r.within_validity = tau < 1.0;
  return r;
}

double best_time_estimates(int n_particles, BestTimeKind which) {
  if (n_particles < 2) throw std::invalid_argument("n_particles must be >= 2");
  const double n = n_particles;
  switch (which) {
    case BestTimeKind::SQUEEZING_MODEL:
      return std::log(2.0 * n) / (2.0 * n);
    case BestTimeKind::QFI_EMPIRICAL:
      return std::log(2.0 * kPi * n) / (2.0 * n);
  }
  throw std::invalid_argument("unknown BestTimeKind");
}

GaussianAsymptotics gaussian_asymptotics(int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  const double n = n_particles;
  const double e = std::exp(1.0);
  return {e / (2.0 * n), 2.0 / e * n * n};
}

FrozenSpinPrediction frozen_spin_prediction(int n_particles, double chi_t) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  const double s2 = std::pow(std::sin(std::sqrt(2.0) * n_particles * chi_t), 2);
  return {1.0 - 0.5 * s2, n_particles * (1.0 + s2)};
}

}  // namespace tact
