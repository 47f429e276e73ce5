#include "swarm/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "swarm/parallel.hpp"

namespace swarm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFieldRadius = 2000.0;     // outer truncation of the interferer field
constexpr double kNearExpectedCount = 64.0;  // exact-sampling budget per draw
constexpr std::size_t kBlocks = 64;

// r2^(-alpha/2) with the common alpha = 3 case routed around pow.
inline double pathloss_from_r2(double r2, double half_alpha) {
  if (half_alpha == 1.5) {
    return 1.0 / (r2 * std::sqrt(r2));
  }
  return std::pow(r2, -half_alpha);
}

// integral_{r_lo}^{r_hi} r^(1 - p) dr with p = moment * alpha; the radial
// part of the first (moment 1) and second (moment 2) Campbell moments.
double radial_moment(double alpha, double moment, double r_lo, double r_hi) {
  const double e = 2.0 - moment * alpha;
  if (std::abs(e) < 1e-12) {
    return std::log(r_hi / r_lo);
  }
  return (std::pow(r_hi, e) - std::pow(r_lo, e)) / e;
}

}  // namespace

double campbell_mean(const WirelessParams& params, const InterferenceRegion& region) {
  if (!(region.inner_radius > 0.0)) {
    throw std::invalid_argument(
        "campbell_mean: diverges without an inner exclusion radius");
  }
  return 2.0 * kPi * params.density_per_m2 * params.p_t *
         radial_moment(params.alpha, 1.0, region.inner_radius, region.outer_radius);
}

double sample_interference(const WirelessParams& params, const InterferenceRegion& region,
                           Rng& rng) {
  params.validate();
  if (region.inner_radius < 0.0 || region.outer_radius <= region.inner_radius) {
    throw std::invalid_argument("sample_interference: invalid region");
  }
  if (params.density_per_m2 == 0.0) {
    return 0.0;
  }

  const double r_lo2 = region.inner_radius * region.inner_radius;
  const double r_hi2 = region.outer_radius * region.outer_radius;
  const double area = kPi * (r_hi2 - r_lo2);
  const std::uint64_t count = rng.poisson(params.density_per_m2 * area);
  const double half_alpha = 0.5 * params.alpha;

  double total = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    // Uniform position on the annulus: r^2 uniform on [r_lo^2, r_hi^2];
    // the angle never enters the path loss.
    const double r2 = r_lo2 + rng.uniform01() * (r_hi2 - r_lo2);
    total += rng.exponential() * pathloss_from_r2(r2, half_alpha);
  }
  return params.p_t * total;
}

InterferenceSampler::InterferenceSampler(const WirelessParams& params) {
  params.validate();
  density_ = params.density_per_m2;
  p_t_ = params.p_t;
  half_alpha_ = 0.5 * params.alpha;
  if (density_ == 0.0) {
    return;
  }
  near_radius_ = std::min(kFieldRadius, std::sqrt(kNearExpectedCount / (kPi * density_)));
  near_radius2_ = near_radius_ * near_radius_;
  near_mean_count_ = density_ * kPi * near_radius2_;
  if (near_radius_ < kFieldRadius) {
    // Far annulus: expected count is huge and each term is tiny, so the
    // aggregate is Gaussian to third order. Mean from Campbell's formula;
    // variance uses E[h^2] = 2 for the unit-mean exponential fading.
    far_mean_ = 2.0 * kPi * density_ * p_t_ *
                radial_moment(2.0 * half_alpha_, 1.0, near_radius_, kFieldRadius);
    far_sd_ = std::sqrt(2.0 * kPi * density_ * p_t_ * p_t_ * 2.0 *
                        radial_moment(2.0 * half_alpha_, 2.0, near_radius_, kFieldRadius));
  }
}

double InterferenceSampler::draw(Rng& rng) const {
  if (density_ == 0.0) {
    return 0.0;
  }
  const std::uint64_t count = rng.poisson(near_mean_count_);
  double total = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double r2 = rng.uniform01() * near_radius2_;
    total += rng.exponential() * pathloss_from_r2(r2, half_alpha_);
  }
  total *= p_t_;
  if (far_sd_ > 0.0) {
    total += std::max(0.0, far_mean_ + far_sd_ * rng.normal());
  }
  return total;
}

double sample_aggregate_interference(const WirelessParams& params, Rng& rng) {
  return InterferenceSampler(params).draw(rng);
}

ReliabilityEstimate mc_reliability(const LinkBudget& budget, const WirelessParams& params,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads) {
  params.validate();
  if (trials < 10000) {
    throw std::invalid_argument("mc_reliability: need at least 10^4 trials");
  }
  if (!(budget.distance > 0.0) || !(budget.required_delay > 0.0)) {
    throw std::invalid_argument("mc_reliability: invalid budget");
  }

  const double gain = std::pow(budget.distance, -params.alpha);
  const double noise = params.noise_power();
  const InterferenceSampler interference_sampler(params);

  std::vector<std::uint64_t> successes(kBlocks, 0);
  std::vector<std::uint64_t> block_trials(kBlocks, 0);
  for (std::size_t b = 0; b < kBlocks; ++b) {
    block_trials[b] = trials / kBlocks + (b < trials % kBlocks ? 1 : 0);
  }

  parallel_for_blocks(kBlocks, resolve_thread_count(threads), [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    std::uint64_t ok = 0;
    for (std::uint64_t i = 0; i < block_trials[b]; ++i) {
      const double signal_fading = rng.gamma_unit_mean(params.beta);
      const double interference = interference_sampler.draw(rng);
      const double sinr = params.p_t * signal_fading * gain / (noise + interference);
      if (link_delay(sinr, params) <= budget.required_delay) {
        ++ok;
      }
    }
    successes[b] = ok;
  });

  std::uint64_t total_ok = 0;
  for (const auto s : successes) {
    total_ok += s;
  }

  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(total_ok) / n;
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double z2 = z * z;
  const double halfwidth =
      z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);

  ReliabilityEstimate out;
  out.value = p_hat;
  out.method = ReliabilityMethod::kMonteCarlo;
  out.trials = trials;
  out.ci_halfwidth_95 = halfwidth;
  return out;
}

}  // namespace swarm
