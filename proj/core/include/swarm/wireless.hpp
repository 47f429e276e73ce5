#pragma once

#include <cstdint>

namespace swarm {

/// Radio and channel parameters of the intra-swarm link and the interfering
/// field. The desired link fades Nakagami with integer parameter beta
/// (power gain Gamma-distributed, unit mean); interferers are a planar
/// Poisson field of density density_per_m2 with Rayleigh fading.
struct WirelessParams {
  int beta = 3;                    // Nakagami parameter; must be a positive integer
  double alpha = 3.0;              // path loss exponent; must be > 2
  double density_per_m2 = 0.05;    // interferer density (PPP)
  double p_t = 0.1;                // transmit power, watts (20 dBm default)
  double noise_psd = 3.9810717055349694e-21;  // W/Hz (-174 dBm/Hz)
  double bandwidth = 20e6;         // Hz
  double packet_bits = 3200.0;     // bits per packet

  /// Diversity constant of the Nakagami tail bound, beta * (beta!)^(-1/beta).
  double eta() const;

  /// Total in-band noise power, noise_psd * bandwidth, watts.
  double noise_power() const { return noise_psd * bandwidth; }

  void validate() const;
};

/// One link evaluation point: distance, the delay the control loop requires,
/// and the SINR that delay translates to.
struct LinkBudget {
  double distance = 4.0;        // meters
  double required_delay = 0.0;  // seconds
  double sinr_threshold = 0.0;  // 2^(S/(w*required_delay)) - 1

  static LinkBudget for_required_delay(double distance, double required_delay,
                                       const WirelessParams& params);
};

enum class ReliabilityMethod { kAnalytic, kMonteCarlo };

struct ReliabilityEstimate {
  double value = 0.0;  // probability in [0, 1]
  ReliabilityMethod method = ReliabilityMethod::kAnalytic;
  std::uint64_t trials = 0;       // Monte Carlo only
  double ci_halfwidth_95 = 0.0;   // Monte Carlo only (Wilson interval)
};

/// Transmission delay of a packet at the given SINR: S / (w log2(1+sinr)).
/// sinr == 0 yields +infinity (the packet never completes); negative sinr is
/// rejected.
double link_delay(double sinr, const WirelessParams& params);

/// SINR needed to deliver a packet within required_delay; exact inverse of
/// link_delay.
double sinr_threshold(double required_delay, const WirelessParams& params);

/// Laplace transform of the aggregate interference at argument n,
///   E[exp(-n I)] = exp(-2 pi^2 lambda (n P_t)^(2/alpha) / (alpha sin(2 pi/alpha))),
/// from the closed form of integral_0^inf (1 - 1/(1 + n P_t r^-alpha)) r dr.
/// Requires alpha > 2 (the integral diverges otherwise).
double interference_laplace(double n, const WirelessParams& params);

/// Same quantity with the radial integral evaluated by adaptive Simpson
/// after the substitution to finite intervals; reference path kept as an
/// independent check of the closed form.
double interference_laplace_quadrature(double n, const WirelessParams& params,
                                       double rel_tol = 1e-9);

/// Probability that the link meets its delay requirement, from the
/// binomial-expanded Nakagami tail bound:
///   sum_{k=1}^{beta} (-1)^(k+1) C(beta,k)
///     * exp(-k eta gamma_th d^alpha sigma_tot^2 / P_t)
///     * L(k eta gamma_th d^alpha / P_t).
/// The d^(+alpha) scaling divides out the channel gain d^-alpha, so
/// reliability falls with distance.
ReliabilityEstimate link_reliability(const LinkBudget& budget, const WirelessParams& params);

}  // namespace swarm
