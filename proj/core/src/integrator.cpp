#include "swarm/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarm {

namespace {
constexpr double kDivergenceLimit = 1e9;
}

double Trajectory::max_abs_error_at(std::size_t i) const {
  double m = 0.0;
  for (const auto& column : e) {
    m = std::max(m, std::abs(column[i]));
  }
  return m;
}

DdeStepper::DdeStepper(const SystemMatrices& mats, const AxisErrors& initial, double step,
                       double history_depth)
    : mats_(mats), step_(step), state_(initial) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("DdeStepper: step must be > 0");
  }
  const auto depth_steps =
      static_cast<std::int64_t>(std::ceil(std::max(history_depth, 0.0) / step)) + 2;
  oldest_index_ = -depth_steps;
  ring_.assign(static_cast<std::size_t>(depth_steps) + 2, Sample{initial.x, initial.y});
}

const DdeStepper::Sample& DdeStepper::slot(std::int64_t index) const {
  const auto cap = static_cast<std::int64_t>(ring_.size());
  return ring_[static_cast<std::size_t>(((index % cap) + cap) % cap)];
}

Vec4 DdeStepper::rhs_axis(const Vec4& e, const Vec4& e_delayed) const {
  return mats_.m1 * e + mats_.m2 * e_delayed;
}

AxisErrors DdeStepper::history_at(double t_query) const {
  // Grid index just below the query; clamp into the retained window.
  auto lo = static_cast<std::int64_t>(std::floor(t_query / step_));
  lo = std::clamp(lo, oldest_index_, step_index_ - 1);
  const double w = t_query / step_ - static_cast<double>(lo);
  const Sample& s0 = slot(lo);
  const Sample& s1 = slot(lo + 1);
  AxisErrors out;
  out.x = s0.x + w * (s1.x - s0.x);
  out.y = s0.y + w * (s1.y - s0.y);
  return out;
}

void DdeStepper::advance(const DelayedSource& delayed_source) {
  const double t = current_time();
  const double h = step_;

  // The delayed term of an RK4 stage lives at stage_time - tau(stage_time).
  // With a non-degenerate delay bound (step <= tau_max/10) this falls inside
  // completed history; an instantaneous delay shorter than the step resolves
  // through the extrapolating lookup. A zero delay collapses the delayed
  // argument onto the stage state itself, recovering classical ODE RK4.
  const auto stage_rhs = [&](double t_stage, const Vec4& ex, const Vec4& ey) {
    const Sample d = delayed_source(t_stage, ex, ey);
    return Sample{rhs_axis(ex, d.x), rhs_axis(ey, d.y)};
  };

  const Sample k1 = stage_rhs(t, state_.x, state_.y);
  const Sample k2 =
      stage_rhs(t + 0.5 * h, state_.x + 0.5 * h * k1.x, state_.y + 0.5 * h * k1.y);
  const Sample k3 =
      stage_rhs(t + 0.5 * h, state_.x + 0.5 * h * k2.x, state_.y + 0.5 * h * k2.y);
  const Sample k4 = stage_rhs(t + h, state_.x + h * k3.x, state_.y + h * k3.y);

  state_.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
  state_.y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);

  ++step_index_;
  const auto cap = static_cast<std::int64_t>(ring_.size());
  ring_[static_cast<std::size_t>(((step_index_ % cap) + cap) % cap)] =
      Sample{state_.x, state_.y};
  oldest_index_ = std::max(oldest_index_, step_index_ - cap + 1);
}

void DdeStepper::step(const std::function<double(double)>& tau_at) {
  advance([&](double t_stage, const Vec4& stage_x, const Vec4& stage_y) {
    const double tau = tau_at(t_stage);
    if (tau <= 0.0) {
      return Sample{stage_x, stage_y};
    }
    const AxisErrors h = history_at(t_stage - tau);
    return Sample{h.x, h.y};
  });
}

void DdeStepper::step_held(const Vec4& held_x, const Vec4& held_y) {
  const Sample held{held_x, held_y};
  advance([&](double, const Vec4&, const Vec4&) { return held; });
}

bool DdeStepper::finite() const {
  return state_.x.allFinite() && state_.y.allFinite() &&
         state_.x.cwiseAbs().maxCoeff() < kDivergenceLimit &&
         state_.y.cwiseAbs().maxCoeff() < kDivergenceLimit;
}

namespace {

void append_row(Trajectory& traj, double t, const AxisErrors& e, double tau) {
  traj.t.push_back(t);
  for (int i = 0; i < 4; ++i) {
    traj.e[i].push_back(e.x(i));
    traj.e[4 + i].push_back(e.y(i));
  }
  traj.tau.push_back(tau);
}

}  // namespace

Trajectory integrate_dde(const SystemMatrices& mats, const AxisErrors& initial,
                         const DelayProcess& delay, double step, double horizon) {
  if (delay.kind == DelayKind::kWirelessCoupled) {
    throw std::invalid_argument(
        "integrate_dde: wireless-coupled delays are handled by simulate_joint");
  }
  if (!(step > 0.0) || step > 1e-3) {
    throw std::invalid_argument("integrate_dde: step must be in (0, 1 ms]");
  }
  if (delay.tau_max > 0.0 && step > delay.tau_max / 10.0) {
    throw std::invalid_argument("integrate_dde: step must be <= tau_max/10");
  }
  if (!(horizon >= step)) {
    throw std::invalid_argument("integrate_dde: horizon must be >= step");
  }

  Trajectory traj;
  traj.step = step;
  traj.horizon = horizon;

  DdeStepper stepper(mats, initial, step, delay.tau_max);
  const auto tau_at = [&delay](double t) { return delay.at(t); };

  append_row(traj, 0.0, initial, delay.at(0.0));
  const auto nsteps = static_cast<std::int64_t>(std::llround(horizon / step));
  for (std::int64_t n = 0; n < nsteps; ++n) {
    stepper.step(tau_at);
    if (!stepper.finite()) {
      traj.status = RunStatus::kDiverged;
      return traj;
    }
    const double t = stepper.current_time();
    append_row(traj, t, stepper.state(), delay.at(t));
  }
  return traj;
}

Trajectory integrate_dde(const SwarmState& initial, const FormationTargets& targets,
                         const ControlGains& gains, const DelayProcess& delay, double step,
                         double horizon) {
  const SystemMatrices mats = build_error_matrices(gains);
  return integrate_dde(mats, compute_errors(initial, targets), delay, step, horizon);
}

ConvergenceReport convergence_metrics(const Trajectory& traj, double eps,
                                      double hold_window) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("convergence_metrics: eps must be > 0");
  }
  if (traj.size() == 0 || !(traj.step > 0.0)) {
    throw std::invalid_argument("convergence_metrics: empty trajectory");
  }

  ConvergenceReport report;
  const std::size_t n = traj.size();
  for (std::size_t i = 0; i < n; ++i) {
    report.max_overshoot = std::max(report.max_overshoot, traj.max_abs_error_at(i));
  }
  if (traj.status == RunStatus::kDiverged) {
    return report;
  }

  // Settle at the start of the final sub-eps run; it must persist to the end
  // of the record and span at least hold_window (counted in grid samples so
  // accumulated-time roundoff cannot flip the comparison). A spike after an
  // early quiet stretch therefore pushes the settle time behind itself.
  std::size_t first_quiet = n;
  for (std::size_t i = n; i-- > 0;) {
    if (traj.max_abs_error_at(i) >= eps) {
      break;
    }
    first_quiet = i;
  }
  const auto window =
      static_cast<std::size_t>(std::llround(std::max(hold_window, 0.0) / traj.step));
  if (first_quiet < n && (n - 1) - first_quiet >= window) {
    report.converged = true;
    report.settle_time = traj.t[first_quiet];
  }
  return report;
}

}  // namespace swarm
