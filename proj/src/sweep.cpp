#include "tact/sweep.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>

#include "tact/numeric.hpp"

namespace tact {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Pre-rotated reference vectors r such that fidelity = |r.dot(psi)|^2.
struct ReferenceBank {
  int n;
  bool even;
  VectorXcd bw, ewss, noon;
  VectorXcd tf;      // U^dag |TF>, U = exp(-i pi/2 Sx)
  MatrixXcd u_rot;   // U itself, for the Yurke alpha scan
  VectorXcd center;  // unused for odd N

  explicit ReferenceBank(const SpinMatrices& s) : n(s.n_particles), even(n % 2 == 0) {
    bw = reference_state(ReferenceKind::BW, n).vector;
    ewss = reference_state(ReferenceKind::EWSS, n).vector;
    noon = reference_state(ReferenceKind::NOON, n).vector;
    if (even) {
      u_rot = rotation_operator(s, Vector3d::UnitX(), 0.5 * kPi);
      tf = u_rot.adjoint() * reference_state(ReferenceKind::TWIN_FOCK, n).vector;
    }
  }
};

}  // namespace

static ObservableRow make_row(double t, const VectorXcd& psi, const SpinMatrices& s,
                              const ReferenceBank* refs) {
  ObservableRow row;
  row.chi_t = t;
  const SpinMoments m = spin_moments(psi, s);
  row.mean = m.mean;
  row.var_sy = m.cov(1, 1);
  row.var_sz = m.cov(2, 2);
  try {
    row.xi2 = squeezing_parameter(m, s.n_particles);
  } catch (const std::domain_error&) {
    row.xi2 = kNaN;
  }
  row.fq = qfi_pure(m).value;
  row.fid_bw = row.fid_ewss = row.fid_y = row.fid_tf = row.fid_noon = kNaN;
  row.yurke_alpha = kNaN;
  if (refs) {
    row.fid_bw = std::norm(refs->bw.dot(psi));
    row.fid_ewss = std::norm(refs->ewss.dot(psi));
    row.fid_noon = std::norm(refs->noon.dot(psi));
    if (refs->even) {
      row.fid_tf = std::norm(refs->tf.dot(psi));
      const VectorXcd u_psi = refs->u_rot * psi;
      std::tie(row.yurke_alpha, row.fid_y) = yurke_alpha_scan(u_psi, refs->n);
    }
  }
  return row;
}

SweepResult sweep_observables(const Propagator& prop, const SpinMatrices& s,
                              const VectorXcd& psi0, const std::vector<double>& times,
                              const SweepOptions& options) {
  require_normalized(psi0);
  SweepResult out;
  out.n_particles = s.n_particles;
  out.rows.reserve(times.size());
  std::unique_ptr<ReferenceBank> refs;
  if (options.with_fidelities) refs = std::make_unique<ReferenceBank>(s);
  const std::vector<VectorXcd> traj = prop.trajectory(psi0, times);
  for (std::size_t i = 0; i < times.size(); ++i)
    out.rows.push_back(make_row(times[i], traj[i], s, refs.get()));
  return out;
}

std::vector<double> make_time_grid(double t_max, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  if (t_max <= 0.0) throw std::invalid_argument("t_max must be positive");
  return linspace(0.0, t_max, samples);
}

std::array<Event, 8> locate_events(const Propagator& prop, const SpinMatrices& s,
                                   const VectorXcd& psi0, const SweepResult& sweep) {
  const auto& rows = sweep.rows;
  if (rows.size() < 5) throw std::invalid_argument("sweep too short for event search");
  const bool even = s.n_particles % 2 == 0;

  // continuous evaluators for the refinement stage
  ReferenceBank refs(s);
  auto state_at = [&](double t) { return prop.evolve(psi0, t); };
  auto col = [&](const std::function<double(const ObservableRow&)>& get) {
    std::vector<double> v(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) v[i] = get(rows[i]);
    return v;
  };

  auto refine = [&](EventLabel label, const std::function<double(double)>& f, int idx) {
    Event ev;
    ev.label = label;
    if (idx <= 0 || idx + 1 >= static_cast<int>(rows.size())) {
      // extremum pinned to the window edge; report it unrefined
      ev.chi_t = rows[std::max(0, idx)].chi_t;
      ev.value = f(ev.chi_t);
      ev.residual = 0.0;
      return ev;
    }
    const Extremum ex =
        refine_maximum(f, rows[idx - 1].chi_t, rows[idx].chi_t, rows[idx + 1].chi_t,
                       1e-6 * (rows[1].chi_t - rows[0].chi_t));
    ev.chi_t = ex.x;
    ev.value = ex.value;
    ev.residual = std::abs(ex.x - rows[idx].chi_t);
    return ev;
  };

  auto argmax = [](const std::vector<double>& v) {
    int best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[best]) best = static_cast<int>(i);
    return best;
  };

  std::array<Event, 8> events;
  events[0] = {EventLabel::A, rows.front().chi_t, kNaN, 0.0};

  const auto fbw = col([](const ObservableRow& r) { return r.fid_bw; });
  events[1] = refine(EventLabel::B,
                     [&](double t) { return std::norm(refs.bw.dot(state_at(t))); },
                     argmax(fbw));

  const auto fewss = col([](const ObservableRow& r) { return r.fid_ewss; });
  events[2] = refine(EventLabel::C,
                     [&](double t) { return std::norm(refs.ewss.dot(state_at(t))); },
                     argmax(fewss));

  const auto xi2 = col([](const ObservableRow& r) { return r.xi2; });
  std::vector<double> neg_xi2(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i)
    neg_xi2[i] = std::isnan(xi2[i]) ? -std::numeric_limits<double>::infinity() : -xi2[i];
  auto xi2_at = [&](double t) {
    return -squeezing_parameter(spin_moments(state_at(t), s), s.n_particles);
  };
  events[3] = refine(EventLabel::D, xi2_at, argmax(neg_xi2));
  events[3].value = -events[3].value;

  if (even) {
    const auto fy = col([](const ObservableRow& r) { return r.fid_y; });
    events[4] = refine(EventLabel::E,
                       [&](double t) {
                         return yurke_alpha_scan(refs.u_rot * state_at(t), s.n_particles).second;
                       },
                       argmax(fy));
  } else {
    events[4] = {EventLabel::E, kNaN, kNaN, 0.0};
  }

  const auto fq = col([](const ObservableRow& r) { return r.fq; });
  auto fq_at = [&](double t) { return qfi_pure(spin_moments(state_at(t), s)).value; };
  events[5] = refine(EventLabel::F, fq_at, argmax(fq));

  if (even) {
    const auto ftf = col([](const ObservableRow& r) { return r.fid_tf; });
    events[6] = refine(EventLabel::G,
                       [&](double t) { return std::norm(refs.tf.dot(state_at(t))); },
                       argmax(ftf));
  } else {
    events[6] = {EventLabel::G, kNaN, kNaN, 0.0};
  }

  // H: the second local minimum of F_Q. On the closed window F_Q starts at
  // its global minimum N (that boundary point is the first), so H is the
  // first interior dip after the maximum; searching past the peak also pins
  // the expected ordering F < H.
  int h_idx = -1;
  for (std::size_t i = static_cast<std::size_t>(argmax(fq)) + 1; i + 1 < fq.size(); ++i)
    if (fq[i] <= fq[i - 1] && fq[i] < fq[i + 1]) {
      h_idx = static_cast<int>(i);
      break;
    }
  if (h_idx < 0) throw std::runtime_error("event H not bracketed");
  events[7] = refine(EventLabel::H, [&](double t) { return -fq_at(t); }, h_idx);
  events[7].value = -events[7].value;

  return events;
}

}  // namespace tact
