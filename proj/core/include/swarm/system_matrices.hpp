#pragma once

#include <Eigen/Dense>

#include "swarm/gains.hpp"

namespace swarm {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

/// Convention for entry (4,1) of the instantaneous matrix, the coefficient
/// coupling follower 3's velocity-error derivative to the leader–follower-2
/// spacing error. kPeerGain (-a_hat3) is what the scalar error derivatives
/// give when the control law is substituted through; kLeaderGain (-a3) is an
/// alternative convention kept so both can be compared numerically.
/// kPeerGain is the default everywhere.
enum class CouplingConvention { kPeerGain, kLeaderGain };

/// The pair (M1, M2) of the augmented error dynamics
///   e_dot(t) = M1 e(t) + M2 e(t - tau(t)),  e = [d12, d13, z2, z3].
/// M2 carries the delayed peer-velocity coupling and is zero except for
/// entries (3,4) = b_hat2 and (4,3) = b_hat3.
struct SystemMatrices {
  Mat4 m1 = Mat4::Zero();
  Mat4 m2 = Mat4::Zero();
  bool hurwitz = false;  // whether m1 + m2 has all eigenvalues in Re < 0
};

/// Assembles M1/M2 from control gains and checks the undelayed matrix
/// M1 + M2 for stability (Routh-Hurwitz on its characteristic polynomial).
/// Throws std::invalid_argument on an invalid gain set.
SystemMatrices build_error_matrices(
    const ControlGains& gains,
    CouplingConvention convention = CouplingConvention::kPeerGain);

}  // namespace swarm
