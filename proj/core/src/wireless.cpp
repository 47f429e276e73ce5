#include "swarm/wireless.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarm/error.hpp"
#include "swarm/quadrature.hpp"

namespace swarm {

namespace {
constexpr double kPi = 3.14159265358979323846;

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) {
    out *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out;
}
}  // namespace

double WirelessParams::eta() const {
  double factorial = 1.0;
  for (int i = 2; i <= beta; ++i) {
    factorial *= static_cast<double>(i);
  }
  return static_cast<double>(beta) * std::pow(factorial, -1.0 / static_cast<double>(beta));
}

void WirelessParams::validate() const {
  if (beta < 1) {
    throw std::invalid_argument("WirelessParams: beta must be a positive integer");
  }
  if (!(alpha > 2.0)) {
    throw std::invalid_argument("WirelessParams: alpha must be > 2");
  }
  if (density_per_m2 < 0.0) {
    throw std::invalid_argument("WirelessParams: density must be >= 0");
  }
  if (!(p_t > 0.0)) {
    throw std::invalid_argument("WirelessParams: transmit power must be > 0");
  }
  if (noise_psd < 0.0) {
    throw std::invalid_argument("WirelessParams: noise PSD must be >= 0");
  }
  if (!(bandwidth > 0.0) || !(packet_bits > 0.0)) {
    throw std::invalid_argument("WirelessParams: bandwidth and packet size must be > 0");
  }
}

LinkBudget LinkBudget::for_required_delay(double distance, double required_delay,
                                          const WirelessParams& params) {
  if (!(distance > 0.0)) {
    throw std::invalid_argument("LinkBudget: distance must be > 0");
  }
  LinkBudget b;
  b.distance = distance;
  b.required_delay = required_delay;
  b.sinr_threshold = swarm::sinr_threshold(required_delay, params);
  return b;
}

double link_delay(double sinr, const WirelessParams& params) {
  if (sinr < 0.0) {
    throw std::invalid_argument("link_delay: sinr must be >= 0");
  }
  if (sinr == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return params.packet_bits / (params.bandwidth * std::log2(1.0 + sinr));
}

double sinr_threshold(double required_delay, const WirelessParams& params) {
  if (!(required_delay > 0.0)) {
    throw std::invalid_argument("sinr_threshold: required delay must be > 0");
  }
  return std::exp2(params.packet_bits / (params.bandwidth * required_delay)) - 1.0;
}

double interference_laplace(double n, const WirelessParams& params) {
  params.validate();
  if (n < 0.0) {
    throw std::invalid_argument("interference_laplace: n must be >= 0");
  }
  if (n == 0.0 || params.density_per_m2 == 0.0) {
    return 1.0;
  }
  const double s = n * params.p_t;
  const double exponent = 2.0 * kPi * kPi * params.density_per_m2 *
                          std::pow(s, 2.0 / params.alpha) /
                          (params.alpha * std::sin(2.0 * kPi / params.alpha));
  return std::exp(-exponent);
}

double interference_laplace_quadrature(double n, const WirelessParams& params,
                                       double rel_tol) {
  params.validate();
  if (n < 0.0) {
    throw std::invalid_argument("interference_laplace: n must be >= 0");
  }
  if (n == 0.0 || params.density_per_m2 == 0.0) {
    return 1.0;
  }
  // integral_0^inf (1 - 1/(1 + s r^-alpha)) r dr with u = r^2, then
  // u = s^(2/alpha) w, reduces to (s^(2/alpha)/2) J with
  //   J = integral_0^inf dw / (1 + w^p),  p = alpha/2 > 1.
  // Splitting at w=1 and substituting y = w^(1-p) on the tail gives two
  // finite smooth integrals:
  //   J = integral_0^1 dw/(1+w^p) + 1/(p-1) integral_0^1 dy/(1+y^(p/(p-1))).
  const double p = params.alpha / 2.0;
  const double q = p / (p - 1.0);
  const double head =
      adaptive_simpson([p](double w) { return 1.0 / (1.0 + std::pow(w, p)); }, 0.0, 1.0,
                       rel_tol);
  const double tail =
      adaptive_simpson([q](double y) { return 1.0 / (1.0 + std::pow(y, q)); }, 0.0, 1.0,
                       rel_tol) /
      (p - 1.0);
  const double s = n * params.p_t;
  const double radial = 0.5 * std::pow(s, 2.0 / params.alpha) * (head + tail);
  return std::exp(-2.0 * kPi * params.density_per_m2 * radial);
}

ReliabilityEstimate link_reliability(const LinkBudget& budget, const WirelessParams& params) {
  params.validate();
  if (!(budget.distance > 0.0) || budget.sinr_threshold < 0.0) {
    throw std::invalid_argument("link_reliability: invalid budget");
  }

  const double eta = params.eta();
  const double base = eta * budget.sinr_threshold *
                      std::pow(budget.distance, params.alpha) / params.p_t;
  const double noise = params.noise_power();

  double sum = 0.0;
  for (int k = 1; k <= params.beta; ++k) {
    const double arg = static_cast<double>(k) * base;
    const double term =
        binomial(params.beta, k) * std::exp(-arg * noise) * interference_laplace(arg, params);
    sum += (k % 2 == 1) ? term : -term;
  }

  ReliabilityEstimate out;
  out.value = std::clamp(sum, 0.0, 1.0);
  out.method = ReliabilityMethod::kAnalytic;
  return out;
}

}  // namespace swarm
