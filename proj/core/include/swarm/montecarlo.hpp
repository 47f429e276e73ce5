#pragma once

#include <cstdint>

#include "swarm/random.hpp"
#include "swarm/wireless.hpp"

namespace swarm {

/// Annulus around the receiver from which interferers are drawn.
struct InterferenceRegion {
  double inner_radius = 0.0;     // meters; 0 means no exclusion zone
  double outer_radius = 2000.0;  // meters
};

/// Exact one-shot draw of the aggregate interference from a PPP on the
/// annulus: N ~ Poisson(lambda * area) interferers placed uniformly, each
/// with unit-mean exponential (Rayleigh power) fading;
/// I = sum P_t h_c r_c^-alpha, watts.
double sample_interference(const WirelessParams& params, const InterferenceRegion& region,
                           Rng& rng);

/// Draws aggregate interference over the full default field (out to
/// 2000 m): an inner disc, sized so its expected interferer count is ~64, is
/// sampled exactly; the far annulus, whose per-interferer contributions are
/// individually negligible, enters as a moment-matched Gaussian clamped at
/// zero. Campbell's formula supplies the far-field mean and variance.
/// Constants are precomputed once so a draw is cheap inside trial loops.
class InterferenceSampler {
 public:
  explicit InterferenceSampler(const WirelessParams& params);
  double draw(Rng& rng) const;

  double near_radius() const { return near_radius_; }

 private:
  double density_ = 0.0;
  double p_t_ = 0.0;
  double half_alpha_ = 1.5;
  double near_radius_ = 0.0;
  double near_radius2_ = 0.0;
  double near_mean_count_ = 0.0;
  double far_mean_ = 0.0;   // watts
  double far_sd_ = 0.0;     // watts
};

/// One-shot convenience wrapper around InterferenceSampler.
double sample_aggregate_interference(const WirelessParams& params, Rng& rng);

/// Campbell mean of the truncated field, 2 pi lambda P_t
/// integral_rmin^rmax r^(1-alpha) dr; the oracle for sampler tests.
double campbell_mean(const WirelessParams& params, const InterferenceRegion& region);

/// Monte Carlo estimate of link reliability: per trial, a Nakagami-beta
/// signal power and an interference draw give an SINR; success means the
/// packet delay meets budget.required_delay. Trials are split over 64 fixed
/// blocks with independently derived RNG streams, so the estimate is
/// bit-identical for any worker count. Requires trials >= 10^4.
ReliabilityEstimate mc_reliability(const LinkBudget& budget, const WirelessParams& params,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads = 0);

}  // namespace swarm
