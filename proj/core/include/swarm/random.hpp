#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace swarm {

/// splitmix64 finalizer; used to derive well-mixed substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ull));
}

/// Deterministic random source: a fully specified engine (mt19937_64) plus
/// hand-rolled transforms, so sequences are reproducible bit-for-bit given a
/// seed regardless of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; useful when 0 must be excluded.
  double uniform01_open_low() { return 1.0 - uniform01(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unit-mean exponential.
  double exponential() { return -std::log(uniform01_open_low()); }

  /// Unit-mean Gamma with integer shape (sum of shape exponentials).
  double gamma_unit_mean(int shape) {
    double prod = 1.0;
    for (int i = 0; i < shape; ++i) {
      prod *= uniform01_open_low();
    }
    return -std::log(prod) / static_cast<double>(shape);
  }

  /// Standard normal, Box-Muller (trigonometric form, no rejection).
  double normal() {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  /// Poisson with arbitrary mean: Knuth multiplication below 30, Hormann's
  /// PTRS transformed rejection above.
  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) {
      return 0;
    }
    if (mean < 30.0) {
      const double limit = std::exp(-mean);
      std::uint64_t n = 0;
      double prod = uniform01();
      while (prod > limit) {
        ++n;
        prod *= uniform01();
      }
      return n;
    }
    return poisson_ptrs(mean);
  }

 private:
  std::uint64_t poisson_ptrs(double mean) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform01() - 0.5;
      const double v = uniform01();
      const double us = 0.5 - std::abs(u);
      const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (kf < 0.0) {
        continue;
      }
      if (us >= 0.07 && v <= vr) {
        return static_cast<std::uint64_t>(kf);
      }
      if (us < 0.013 && v > us) {
        continue;
      }
      if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
          kf * loglam - mean - std::lgamma(kf + 1.0)) {
        return static_cast<std::uint64_t>(kf);
      }
    }
  }

  std::mt19937_64 engine_;
};

}  // namespace swarm
