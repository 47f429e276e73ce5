#pragma once

#include <string>

#include <swarm/integrator.hpp>
#include <swarm/joint.hpp>

namespace swarmctl {

/// Shortest-faithful decimal with 9 significant digits, locale-independent
/// (std::to_chars). Infinities render as "inf"/"-inf".
std::string format_double(double v);

/// Writes `t,delta12x,delta13x,z2x,z3x,delta12y,delta13y,z2y,z3y,tau_ms`,
/// one row per step.
void write_trajectory_csv(const swarm::Trajectory& traj, const std::string& path);

/// One sweep row; the Monte Carlo fields stay empty when has_mc is false.
struct ReliabilityRow {
  double density = 0.0;
  double spacing = 0.0;
  double analytic = 0.0;
  bool has_mc = false;
  double mc = 0.0;
  double mc_ci95 = 0.0;
};

/// Writes `density_per_m2,spacing_m,reliability_analytic,reliability_mc,mc_ci95`.
void write_reliability_csv(const std::vector<ReliabilityRow>& rows, const std::string& path);

/// Writes `period,t,distance_m,sinr,delay_ms,lost`, one row per control period.
void write_joint_csv(const swarm::JointRunRecord& record, const std::string& path);

}  // namespace swarmctl
