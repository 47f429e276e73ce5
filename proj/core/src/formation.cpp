#include "swarm/formation.hpp"

namespace swarm {

AxisErrors compute_errors(const SwarmState& state, const FormationTargets& targets) {
  const auto& u1 = state.uav[0];
  const auto& u2 = state.uav[1];
  const auto& u3 = state.uav[2];

  AxisErrors e;
  e.x << u1.x - u2.x - targets.x_bar_12, u1.x - u3.x - targets.x_bar_13,
      u2.vx - targets.v_bar_x, u3.vx - targets.v_bar_x;
  e.y << u1.y - u2.y - targets.y_bar_12, u1.y - u3.y - targets.y_bar_13,
      u2.vy - targets.v_bar_y, u3.vy - targets.v_bar_y;
  return e;
}

SwarmState reconstruct_state(const AxisErrors& e, const FormationTargets& targets,
                             double leader_x, double leader_y, double t) {
  SwarmState s;
  s.t = t;
  s.uav[0] = {leader_x, leader_y, targets.v_bar_x, targets.v_bar_y};
  s.uav[1] = {leader_x - targets.x_bar_12 - e.x(0), leader_y - targets.y_bar_12 - e.y(0),
              targets.v_bar_x + e.x(2), targets.v_bar_y + e.y(2)};
  s.uav[2] = {leader_x - targets.x_bar_13 - e.x(1), leader_y - targets.y_bar_13 - e.y(1),
              targets.v_bar_x + e.x(3), targets.v_bar_y + e.y(3)};
  return s;
}

Accel2d control_acceleration(int follower, const UavKinematics& own,
                             double delayed_leader_vx, double delayed_leader_vy,
                             double delayed_peer_vx, double delayed_peer_vy,
                             const SensedSpacingErrors& sensed, const ControlGains& gains) {
  if (follower != 2 && follower != 3) {
    throw std::invalid_argument("follower index must be 2 or 3");
  }
  const double a = follower == 2 ? gains.a2 : gains.a3;
  const double b = follower == 2 ? gains.b2 : gains.b3;
  const double a_hat = follower == 2 ? gains.a_hat2 : gains.a_hat3;
  const double b_hat = follower == 2 ? gains.b_hat2 : gains.b_hat3;

  Accel2d u;
  u.ax = a * sensed.leader_x + b * (delayed_leader_vx - own.vx) + a_hat * sensed.peer_x +
         b_hat * (delayed_peer_vx - own.vx);
  u.ay = a * sensed.leader_y + b * (delayed_leader_vy - own.vy) + a_hat * sensed.peer_y +
         b_hat * (delayed_peer_vy - own.vy);
  return u;
}

Vec4 error_dynamics_rhs(const Vec4& e, const Vec4& e_delayed, const SystemMatrices& mats) {
  return mats.m1 * e + mats.m2 * e_delayed;
}

}  // namespace swarm
