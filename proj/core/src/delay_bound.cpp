#include "swarm/delay_bound.hpp"

#include <stdexcept>

#include "swarm/error.hpp"

namespace swarm {

DelayBound delay_bound(const SystemMatrices& mats, double k) {
  if (!(k > 1.0)) {
    throw std::invalid_argument("delay_bound: k must be > 1");
  }
  if (!mats.hurwitz) {
    throw numerical_error("undelayed system unstable");
  }

  DelayBound out;
  out.k = k;
  out.c = solve_lyapunov(mats.m1 + mats.m2);

  const Mat4 p1 = out.c * mats.m2 * mats.m1;
  const Mat4 p2 = out.c * mats.m2 * mats.m2;
  Mat4 g = 2.0 * (p1 * p1.transpose() + p2 * p2.transpose());
  g += 2.0 * k * Mat4::Identity();
  g = 0.5 * (g + g.transpose());

  out.lambda_max = max_eigenvalue_symmetric(g);
  out.tau_max = 1.0 / out.lambda_max;
  return out;
}

double formation_delay_requirement(const ControlGains& gains, double k) {
  // Identical gains on both axes make the x- and y-axis matrices equal, so
  // min(tau_x, tau_y) collapses to a single evaluation.
  return delay_bound(build_error_matrices(gains), k).tau_max;
}

}  // namespace swarm
