#include "tact/metrology.hpp"

#include <cmath>
#include <stdexcept>

#include "tact/numeric.hpp"

namespace tact {

SpinMoments spin_moments(const VectorXcd& psi, const SpinMatrices& s) {
  if (psi.size() != s.dim())
    throw std::invalid_argument("state dimension does not match spin matrices");
  const VectorXcd v[3] = {s.sx * psi, s.sy * psi, s.sz * psi};
  SpinMoments m;
  for (int i = 0; i < 3; ++i) m.mean[i] = psi.dot(v[i]).real();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      // symmetrized second moment: Re(v_i^dag v_j) = (1/2)<S_iS_j + S_jS_i>
      const double second = v[i].dot(v[j]).real();
      m.cov(i, j) = m.cov(j, i) = second - m.mean[i] * m.mean[j];
    }
  return m;
}

std::pair<Vector3d, Vector3d> transverse_basis(const Vector3d& mean) {
  const Vector3d zhat = Vector3d::UnitZ();
  Vector3d e1 = zhat.cross(mean);
  if (e1.norm() <= 1e-8 * mean.norm())
    e1 = Vector3d::UnitX();  // mean along z
  else
    e1.normalize();
  const Vector3d e2 = mean.normalized().cross(e1);
  return {e1, e2};
}

double squeezing_parameter(const SpinMoments& m, int n_particles) {
  const double mag = m.mean.norm();
  if (mag <= 1e-8 * n_particles)
    throw std::domain_error("mean spin vanishes; xi^2 undefined");
  const auto [e1, e2] = transverse_basis(m.mean);
  const double v11 = e1.dot(m.cov * e1);
  const double v22 = e2.dot(m.cov * e2);
  const double v12 = e1.dot(m.cov * e2);
  const double var_min =
      0.5 * (v11 + v22 - std::sqrt((v11 - v22) * (v11 - v22) + 4.0 * v12 * v12));
  return n_particles * var_min / (mag * mag);
}

QfiResult qfi_pure(const SpinMoments& m) {
  Eigen::SelfAdjointEigenSolver<Matrix3d> es(m.cov);
  QfiResult r;
  r.value = 4.0 * es.eigenvalues()(2);
  r.direction = es.eigenvectors().col(2);
  return r;
}

static void require_even(int n, const char* what) {
  if (n % 2 != 0)
    throw std::invalid_argument(std::string(what) + " requires even N");
}

ReferenceState reference_state(ReferenceKind kind, int n_particles, double alpha) {
  if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
  const int n = n_particles;
  ReferenceState ref{kind, n, alpha, VectorXcd::Zero(n + 1)};
  switch (kind) {
    case ReferenceKind::BW: {
      const double norm = 1.0 / std::sqrt(1.0 + 0.5 * n);
      for (int k = 0; k <= n; ++k)
        ref.vector[k] = norm * std::cos((k - 0.5 * n) * kPi / (n + 2));
      break;
    }
    case ReferenceKind::EWSS:
      ref.vector.setConstant(1.0 / std::sqrt(double(n + 1)));
      break;
    case ReferenceKind::YURKE: {
      require_even(n, "YURKE state");
      const double s = std::sin(alpha), c = std::cos(alpha);
      ref.vector[n / 2 + 1] = s / std::sqrt(2.0);
      ref.vector[n / 2] = c;
      ref.vector[n / 2 - 1] = s / std::sqrt(2.0);
      break;
    }
    case ReferenceKind::TWIN_FOCK:
      require_even(n, "TWIN_FOCK state");
      ref.vector[n / 2] = 1.0;
      break;
    case ReferenceKind::NOON:
      ref.vector[0] = ref.vector[n] = 1.0 / std::sqrt(2.0);
      break;
  }
  return ref;
}

double qfi_analytic(ReferenceKind kind, int n_particles, double alpha) {
  const double n = n_particles;
  switch (kind) {
    case ReferenceKind::BW: {
      // 4 Var(Sz) of the BW amplitudes as a finite sum
      double sum = 0.0;
      for (int k = 0; k <= n_particles; ++k) {
        const double c = std::cos((k - 0.5 * n) * kPi / (n + 2));
        sum += c * c * (2.0 * k - n) * (2.0 * k - n);
      }
      return 2.0 / (2.0 + n) * sum;
    }
    case ReferenceKind::EWSS:
      return n * n / 3.0 * (1.0 + 2.0 / n);
    case ReferenceKind::YURKE: {
      require_even(n_particles, "YURKE state");
      const double s2 = std::sin(alpha) * std::sin(alpha);
      return 0.5 * n * (0.5 * n + 1.0) * (2.0 - s2) - 2.0 * s2;
    }
    case ReferenceKind::TWIN_FOCK:
      require_even(n_particles, "TWIN_FOCK state");
      return n * n / 2.0 * (1.0 + 2.0 / n);
    case ReferenceKind::NOON:
      return n * n;
  }
  throw std::invalid_argument("unknown ReferenceKind");
}

double fidelity(const VectorXcd& psi, const ReferenceState& ref,
                const std::optional<MatrixXcd>& pre_rotation) {
  if (psi.size() != ref.vector.size())
    throw std::invalid_argument("state dimension does not match reference");
  VectorXcd u_psi;
  if (pre_rotation) {
    if (pre_rotation->rows() != psi.size() || pre_rotation->cols() != psi.size())
      throw std::invalid_argument("pre_rotation dimension mismatch");
    u_psi = (*pre_rotation) * psi;
  } else if (ref.kind == ReferenceKind::TWIN_FOCK || ref.kind == ReferenceKind::YURKE) {
    u_psi = rotate_state(psi, Vector3d::UnitX(), 0.5 * kPi);
  } else {
    u_psi = psi;
  }
  return std::norm(ref.vector.dot(u_psi));
}

std::pair<double, double> yurke_alpha_scan(const VectorXcd& rotated_psi, int n_particles) {
  require_even(n_particles, "Yurke alpha scan");
  const int mid = n_particles / 2;
  // <Y(alpha)|u> = sin(a) A + cos(a) B with the side/center overlaps
  const Complex a = (rotated_psi[mid + 1] + rotated_psi[mid - 1]) / std::sqrt(2.0);
  const Complex b = rotated_psi[mid];
  const auto fid = [&](double alpha) {
    return std::norm(std::sin(alpha) * a + std::cos(alpha) * b);
  };
  // coarse grid on [0, pi/2], then golden-section around the best node
  const int n_grid = 64;
  int k_best = 0;
  double f_best = fid(0.0);
  for (int k = 1; k <= n_grid; ++k) {
    const double f = fid(0.5 * kPi * k / n_grid);
    if (f > f_best) { f_best = f; k_best = k; }
  }
  double lo = 0.5 * kPi * std::max(0, k_best - 1) / n_grid;
  double hi = 0.5 * kPi * std::min(n_grid, k_best + 1) / n_grid;
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = fid(x1), f2 = fid(x2);
  while (hi - lo > 1e-4) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = fid(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = fid(x1);
    }
  }
  const double alpha = 0.5 * (lo + hi);
  return {alpha, fid(alpha)};
}

YurkeOptimum optimize_yurke_alpha(const std::vector<VectorXcd>& trajectory,
                                  const std::vector<double>& times, int n_particles) {
  require_even(n_particles, "YURKE optimization");
  if (trajectory.empty() || trajectory.size() != times.size())
    throw std::invalid_argument("trajectory/times size mismatch");

  YurkeOptimum best{0.0, times[0], -1.0, 0};
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto [alpha, f] = yurke_alpha_scan(trajectory[i], n_particles);
    if (f > best.fidelity) best = {alpha, times[i], f, i};
  }
  return best;
}

VectorXd fock_probabilities(const VectorXcd& psi) {
  return psi.cwiseAbs2();
}

}  // namespace tact
