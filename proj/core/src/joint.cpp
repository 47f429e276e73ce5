#include "swarm/joint.hpp"

#include <cmath>
#include <stdexcept>

#include "swarm/montecarlo.hpp"
#include "swarm/random.hpp"

namespace swarm {

namespace {

double follower_distance(const AxisErrors& e, const FormationTargets& targets) {
  // x2 - x3 = (d13 - d12) + x_bar_23, same structure on y.
  const double dx = e.x(1) - e.x(0) + targets.x_bar_23();
  const double dy = e.y(1) - e.y(0) + targets.y_bar_23();
  return std::hypot(dx, dy);
}

void append_row(Trajectory& traj, double t, const AxisErrors& e, double tau) {
  traj.t.push_back(t);
  for (int i = 0; i < 4; ++i) {
    traj.e[i].push_back(e.x(i));
    traj.e[4 + i].push_back(e.y(i));
  }
  traj.tau.push_back(tau);
}

}  // namespace

JointRunRecord simulate_joint(const SwarmState& initial, const FormationTargets& targets,
                              const ControlGains& gains, const WirelessParams& radio,
                              double k, const JointRunConfig& config, std::uint64_t seed) {
  radio.validate();
  const SystemMatrices mats = build_error_matrices(gains);
  const DelayBound bound = delay_bound(mats, k);
  const double tau_max = bound.tau_max;
  const double depth = 2.0 * tau_max;

  if (!(config.step > 0.0) || config.step > 1e-3 || config.step > tau_max / 10.0) {
    throw std::invalid_argument("simulate_joint: step must be in (0, min(1 ms, tau_max/10)]");
  }
  if (config.control_period < config.step || config.horizon < config.control_period) {
    throw std::invalid_argument("simulate_joint: need step <= control_period <= horizon");
  }

  const auto steps_per_period =
      static_cast<std::int64_t>(std::llround(config.control_period / config.step));
  const auto n_periods =
      static_cast<std::int64_t>(std::llround(config.horizon / config.control_period));

  JointRunRecord record;
  record.tau_max = tau_max;
  record.trajectory.step = config.step;
  record.trajectory.horizon = config.horizon;

  const AxisErrors e0 = compute_errors(initial, targets);
  DdeStepper stepper(mats, e0, config.step, depth);
  const InterferenceSampler interference_sampler(radio);
  Rng rng(derive_seed(seed, 0x6A6F696E74ull));  // dedicated substream for the radio draws

  append_row(record.trajectory, 0.0, e0, 0.0);

  double tau_last_good = tau_max;  // pre-start packets carry the constant initial history
  std::int64_t met = 0;

  for (std::int64_t p = 0; p < n_periods; ++p) {
    const double t_period = stepper.current_time();

    JointPeriod period;
    period.t = t_period;
    period.distance = follower_distance(stepper.state(), targets);

    const double signal_fading = rng.gamma_unit_mean(radio.beta);
    const double interference = interference_sampler.draw(rng);
    period.sinr = radio.p_t * signal_fading * std::pow(period.distance, -radio.alpha) /
                  (radio.noise_power() + interference);
    period.delay = link_delay(period.sinr, radio);
    period.lost = !(period.delay <= depth);
    if (period.delay <= tau_max) {
      ++met;
    }

    if (period.lost) {
      // Zero-order hold: keep the newest delayed sample the controller had.
      const AxisErrors held = stepper.history_at(t_period - tau_last_good);
      for (std::int64_t s = 0; s < steps_per_period; ++s) {
        stepper.step_held(held.x, held.y);
        if (!stepper.finite()) break;
        append_row(record.trajectory, stepper.current_time(), stepper.state(), period.delay);
      }
    } else {
      const double tau = period.delay;
      tau_last_good = tau;
      const auto tau_at = [tau](double) { return tau; };
      for (std::int64_t s = 0; s < steps_per_period; ++s) {
        stepper.step(tau_at);
        if (!stepper.finite()) break;
        append_row(record.trajectory, stepper.current_time(), stepper.state(), period.delay);
      }
    }

    record.periods.push_back(period);
    if (!stepper.finite()) {
      record.trajectory.status = RunStatus::kDiverged;
      break;
    }
  }

  record.delay_met_fraction =
      record.periods.empty() ? 0.0 : static_cast<double>(met) / record.periods.size();
  record.convergence =
      convergence_metrics(record.trajectory, config.convergence_eps, config.convergence_hold);
  return record;
}

}  // namespace swarm
