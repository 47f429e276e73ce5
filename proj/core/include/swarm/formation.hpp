#pragma once

#include <array>
#include <stdexcept>

#include "swarm/gains.hpp"
#include "swarm/system_matrices.hpp"

namespace swarm {

/// Target geometry and cruise velocity of the formation. Spacings are
/// leader-relative; the follower-follower spacings are always derived
/// (x23 = x13 - x12 and so on), never stored.
struct FormationTargets {
  double x_bar_12 = 3.0;
  double x_bar_13 = 4.0;
  double y_bar_12 = 4.0;
  double y_bar_13 = 3.0;
  double v_bar_x = 5.0;
  double v_bar_y = 5.0;

  double x_bar_23() const { return x_bar_13 - x_bar_12; }
  double y_bar_23() const { return y_bar_13 - y_bar_12; }
  double x_bar_32() const { return -x_bar_23(); }
  double y_bar_32() const { return -y_bar_23(); }
};

struct UavKinematics {
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;
};

/// Planar positions and velocities of the three UAVs at one instant.
/// Index 0 is the leader, whose velocity stays pinned to the target.
struct SwarmState {
  std::array<UavKinematics, 3> uav{};
  double t = 0.0;

  const UavKinematics& leader() const { return uav[0]; }
  const UavKinematics& follower(int i) const {
    if (i != 2 && i != 3) throw std::invalid_argument("follower index must be 2 or 3");
    return uav[i - 1];
  }
};

/// Per-axis error 4-vector [d12, d13, z2, z3]: spacing errors to the leader
/// and velocity errors against the formation target.
struct AxisErrors {
  Vec4 x = Vec4::Zero();
  Vec4 y = Vec4::Zero();
};

/// Spacing and velocity errors of both followers from the current state.
AxisErrors compute_errors(const SwarmState& state, const FormationTargets& targets);

/// Inverse of compute_errors: places the leader at (leader_x, leader_y) and
/// reconstructs follower positions/velocities from the error coordinates.
SwarmState reconstruct_state(const AxisErrors& errors, const FormationTargets& targets,
                             double leader_x = 0.0, double leader_y = 0.0, double t = 0.0);

/// Spacing errors a follower senses: to the leader (d_1i) and to its peer
/// (d_ji), per axis. Radar sensing is instantaneous, so these carry no delay.
struct SensedSpacingErrors {
  double leader_x = 0.0;
  double leader_y = 0.0;
  double peer_x = 0.0;
  double peer_y = 0.0;
};

struct Accel2d {
  double ax = 0.0;
  double ay = 0.0;
};

/// Control law of follower i: per axis,
///   u = a d_1i + b (v1_delayed - v_own) + a_hat d_ji + b_hat (vj_delayed - v_own).
/// Velocity terms arrive over the wireless links and are therefore delayed;
/// spacing errors are sensed locally and are current.
Accel2d control_acceleration(int follower, const UavKinematics& own,
                             double delayed_leader_vx, double delayed_leader_vy,
                             double delayed_peer_vx, double delayed_peer_vy,
                             const SensedSpacingErrors& sensed, const ControlGains& gains);

/// Right-hand side of the delayed error dynamics: m1 * e + m2 * e_delayed.
Vec4 error_dynamics_rhs(const Vec4& e, const Vec4& e_delayed, const SystemMatrices& mats);

}  // namespace swarm
