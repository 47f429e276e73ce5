#include "swarm/system_matrices.hpp"

#include "swarm/linalg.hpp"

namespace swarm {

SystemMatrices build_error_matrices(const ControlGains& g, CouplingConvention convention) {
  g.validate();

  SystemMatrices out;
  // Spacing-error rows: d12_dot = -z2, d13_dot = -z3.
  out.m1(0, 2) = -1.0;
  out.m1(1, 3) = -1.0;
  // z2_dot = (a2+a_hat2) d12 - a_hat2 d13 - (b2+b_hat2) z2 + b_hat2 z3(t-tau)
  out.m1(2, 0) = g.a2 + g.a_hat2;
  out.m1(2, 1) = -g.a_hat2;
  out.m1(2, 2) = -(g.b2 + g.b_hat2);
  // z3_dot = -a_hat3 d12 + (a3+a_hat3) d13 - (b3+b_hat3) z3 + b_hat3 z2(t-tau)
  out.m1(3, 0) = convention == CouplingConvention::kPeerGain ? -g.a_hat3 : -g.a3;
  out.m1(3, 1) = g.a3 + g.a_hat3;
  out.m1(3, 3) = -(g.b3 + g.b_hat3);

  out.m2(2, 3) = g.b_hat2;
  out.m2(3, 2) = g.b_hat3;

  out.hurwitz = is_hurwitz(out.m1 + out.m2);
  return out;
}

}  // namespace swarm
