#include "swarm/delay_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarm/random.hpp"

namespace swarm {

DelayProcess DelayProcess::constant(double tau) {
  if (tau < 0.0) {
    throw std::invalid_argument("DelayProcess: constant delay must be >= 0");
  }
  DelayProcess p;
  p.kind = DelayKind::kConstant;
  p.tau_max = tau;
  return p;
}

DelayProcess DelayProcess::uniform_resampled(double tau_max, double resample_period,
                                             std::uint64_t seed) {
  if (!(tau_max > 0.0) || !(resample_period > 0.0)) {
    throw std::invalid_argument("DelayProcess: tau_max and resample_period must be > 0");
  }
  DelayProcess p;
  p.kind = DelayKind::kUniformResampled;
  p.tau_max = tau_max;
  p.resample_period = resample_period;
  p.seed = seed;
  p.min_delay = std::min(1e-5, 0.5 * tau_max);
  return p;
}

double DelayProcess::at(double t) const {
  switch (kind) {
    case DelayKind::kConstant:
      return tau_max;
    case DelayKind::kUniformResampled: {
      const auto interval = static_cast<std::uint64_t>(std::floor(t / resample_period));
      // One mixed draw per resample interval; u in (0,1] keeps the value
      // inside (min_delay, tau_max].
      const double u =
          static_cast<double>(derive_seed(seed, interval) >> 11) * 0x1.0p-53;
      return min_delay + (1.0 - u) * (tau_max - min_delay);
    }
    case DelayKind::kWirelessCoupled:
      throw std::logic_error(
          "DelayProcess: wireless-coupled delays are produced by the joint simulation");
  }
  throw std::logic_error("DelayProcess: unknown kind");
}

}  // namespace swarm
