#pragma once

#include <cstdint>
#include <vector>

#include "swarm/delay_bound.hpp"
#include "swarm/integrator.hpp"
#include "swarm/wireless.hpp"

namespace swarm {

/// One control period of a coupled control-plus-wireless run.
struct JointPeriod {
  double t = 0.0;         // period start, seconds
  double distance = 0.0;  // follower-follower distance when the packet was sent
  double sinr = 0.0;
  double delay = 0.0;     // seconds; may be +inf at zero SINR
  bool lost = false;      // delay exceeded the history depth (2 tau_max)
};

struct JointRunRecord {
  std::vector<JointPeriod> periods;
  Trajectory trajectory;
  ConvergenceReport convergence;
  double tau_max = 0.0;             // stability bound the delays are judged against
  double delay_met_fraction = 0.0;  // fraction of periods with delay <= tau_max
};

struct JointRunConfig {
  double step = 5e-4;             // seconds
  double horizon = 60.0;          // seconds
  double control_period = 0.01;   // seconds; one packet per period
  double convergence_eps = 1e-2;
  double convergence_hold = 2.0;  // seconds
};

/// Couples the wireless link into the error dynamics: each control period
/// draws an SINR for the follower-follower link at its current distance,
/// converts it to a packet delay, and integrates the period with that delay.
/// A packet whose delay exceeds the history depth (2 tau_max) is lost; the
/// controller then holds the delayed-error vector sampled at the start of
/// the lost period (zero-order hold).
JointRunRecord simulate_joint(const SwarmState& initial, const FormationTargets& targets,
                              const ControlGains& gains, const WirelessParams& radio,
                              double k, const JointRunConfig& config, std::uint64_t seed);

}  // namespace swarm
