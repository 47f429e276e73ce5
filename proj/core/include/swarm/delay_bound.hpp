#pragma once

#include "swarm/linalg.hpp"

namespace swarm {

/// Result of the Lyapunov-based delay-tolerance analysis.
struct DelayBound {
  Mat4 c = Mat4::Zero();    // symmetric positive definite, C(M1+M2)+(M1+M2)^T C = -I
  double lambda_max = 0.0;  // largest eigenvalue of the bound matrix G
  double tau_max = 0.0;     // seconds; 1 / lambda_max, always <= 1/(2k)
  double k = 0.0;
};

/// Maximum wireless delay the error dynamics tolerate while staying
/// asymptotically stable:
///
///   G = 2 (C M2 M1)(C M2 M1)^T + 2 (C M2 M2)(C M2 M2)^T + 2 k I,
///   tau_max = 1 / lambda_max(G),  k > 1.
///
/// Requires M1 + M2 Hurwitz; otherwise throws
/// numerical_error("undelayed system unstable"). k <= 1 throws
/// std::invalid_argument. Since G >= 2kI, tau_max <= 1/(2k), with equality
/// exactly when M2 = 0.
DelayBound delay_bound(const SystemMatrices& mats, double k);

/// Delay requirement for the whole formation: min over the two axes of the
/// per-axis bound. The control law applies identical gains on both axes, so
/// the x- and y-axis matrices coincide and the bound is computed once.
double formation_delay_requirement(const ControlGains& gains, double k);

}  // namespace swarm
