#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swarm/delay_process.hpp"
#include "swarm/formation.hpp"

namespace swarm {

enum class RunStatus { kCompleted, kDiverged };

/// Fixed-step record of the eight error coordinates (x-axis 4-vector then
/// y-axis 4-vector) plus the delay active at each sample.
struct Trajectory {
  double step = 0.0;     // seconds
  double horizon = 0.0;  // seconds
  std::uint64_t scenario_hash = 0;
  RunStatus status = RunStatus::kCompleted;
  std::vector<double> t;
  std::vector<double> e[8];  // delta12x, delta13x, z2x, z3x, delta12y, delta13y, z2y, z3y
  std::vector<double> tau;   // seconds

  std::size_t size() const { return t.size(); }
  double max_abs_error_at(std::size_t i) const;
};

struct ConvergenceReport {
  bool converged = false;
  double settle_time = 0.0;   // seconds; valid when converged
  double max_overshoot = 0.0; // peak |error| over the run
};

/// Classical RK4 on the two per-axis error systems with the delayed term
/// read from a ring-buffer history by linear interpolation. History on
/// [-depth, 0] starts constant at the initial error. A query past the newest
/// completed sample (possible when the instantaneous delay is shorter than
/// the step) extrapolates linearly from the last two samples.
class DdeStepper {
 public:
  DdeStepper(const SystemMatrices& mats, const AxisErrors& initial, double step,
             double history_depth);

  /// Advance one step; tau_at(t) gives the delay at stage times.
  void step(const std::function<double(double)>& tau_at);

  /// Advance one step with the delayed term frozen at the given vectors.
  void step_held(const Vec4& held_x, const Vec4& held_y);

  /// Interpolated historical state; t_query <= current_time().
  AxisErrors history_at(double t_query) const;

  double current_time() const { return static_cast<double>(step_index_) * step_; }
  const AxisErrors& state() const { return state_; }
  bool finite() const;

 private:
  struct Sample {
    Vec4 x;
    Vec4 y;
  };
  using DelayedSource =
      std::function<Sample(double t_stage, const Vec4& stage_x, const Vec4& stage_y)>;

  Vec4 rhs_axis(const Vec4& e, const Vec4& e_delayed) const;
  void advance(const DelayedSource& delayed_source);
  const Sample& slot(std::int64_t index) const;

  SystemMatrices mats_;
  double step_;
  std::int64_t step_index_ = 0;
  std::int64_t oldest_index_;
  AxisErrors state_;
  std::vector<Sample> ring_;
};

/// Integrates the delayed error dynamics from the given initial state over a
/// uniform grid. Preconditions: 0 < step <= 1 ms, step <= tau_max/10 when the
/// process has tau_max > 0, horizon >= step. A non-finite state aborts the
/// run with RunStatus::kDiverged and the rows produced so far.
Trajectory integrate_dde(const SwarmState& initial, const FormationTargets& targets,
                         const ControlGains& gains, const DelayProcess& delay, double step,
                         double horizon);

/// Matrix-level entry point; also used to integrate systems whose gain set
/// would not pass validation (for divergence studies).
Trajectory integrate_dde(const SystemMatrices& mats, const AxisErrors& initial,
                         const DelayProcess& delay, double step, double horizon);

/// Settling analysis: settle_time is the first instant from which every
/// error magnitude stays below eps through the end of the record, which must
/// span at least hold_window seconds.
ConvergenceReport convergence_metrics(const Trajectory& traj, double eps,
                                      double hold_window);

}  // namespace swarm
