#pragma once

#include <cstdint>

namespace swarm {

enum class DelayKind { kConstant, kUniformResampled, kWirelessCoupled };

/// The wireless delay seen by the follower-follower link, as a pure function
/// of time. Values are piecewise constant over resample periods and, for the
/// stochastic kind, land in (min_delay, tau_max]; the process is fully
/// determined by its seed. kWirelessCoupled is state-dependent and is driven
/// by the joint simulation instead of at().
struct DelayProcess {
  DelayKind kind = DelayKind::kConstant;
  double tau_max = 0.0;          // seconds; also the constant value for kConstant
  double resample_period = 0.01; // seconds
  std::uint64_t seed = 0;
  double min_delay = 1e-5;       // lower cutoff for the uniform kind

  static DelayProcess constant(double tau);
  static DelayProcess uniform_resampled(double tau_max, double resample_period,
                                        std::uint64_t seed);

  /// Delay in effect at time t >= 0. Throws for kWirelessCoupled.
  double at(double t) const;
};

}  // namespace swarm
