#pragma once

#include <stdexcept>

namespace swarm {

/// Control gains of the two follower UAVs. Per follower i ∈ {2,3}:
///   a_i   weights the spacing error to the leader,
///   b_i   weights the velocity error to the (delayed) leader velocity,
///   a_hat weights the spacing error to the peer follower,
///   b_hat weights the velocity error to the (delayed) peer velocity.
/// All gains must be strictly positive.
/// Leader-tracking gains (a, b) must be strictly positive; peer-coupling
/// gains (a_hat, b_hat) may be zero, which decouples the followers.
struct ControlGains {
  double a2 = 1.0;
  double b2 = 1.0;
  double a_hat2 = 1.5;
  double b_hat2 = 1.5;
  double a3 = 1.0;
  double b3 = 1.0;
  double a_hat3 = 1.5;
  double b_hat3 = 1.5;

  bool valid() const {
    return a2 > 0 && b2 > 0 && a3 > 0 && b3 > 0 &&
           a_hat2 >= 0 && b_hat2 >= 0 && a_hat3 >= 0 && b_hat3 >= 0;
  }

  void validate() const {
    if (!valid()) {
      throw std::invalid_argument(
          "ControlGains: leader gains must be > 0 and coupling gains >= 0");
    }
  }
};

}  // namespace swarm
