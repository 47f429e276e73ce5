#include <doctest.h>

#include <cmath>

#include <swarm/delay_bound.hpp>
#include <swarm/error.hpp>
#include <swarm/random.hpp>
#include <swarm/system_matrices.hpp>

#include "oracles.hpp"

using swarm::ControlGains;
using swarm::Mat4;
using swarm::Vec4;

namespace {

ControlGains random_gains(swarm::Rng& rng) {
  ControlGains g;
  g.a2 = rng.uniform(0.1, 3.0);
  g.b2 = rng.uniform(0.1, 3.0);
  g.a_hat2 = rng.uniform(0.0, 3.0);
  g.b_hat2 = rng.uniform(0.0, 3.0);
  g.a3 = rng.uniform(0.1, 3.0);
  g.b3 = rng.uniform(0.1, 3.0);
  g.a_hat3 = rng.uniform(0.0, 3.0);
  g.b_hat3 = rng.uniform(0.0, 3.0);
  return g;
}

}  // namespace

TEST_CASE("error matrices from the reference gain set") {
  const ControlGains g;  // 1, 1, 1.5, 1.5 for both followers
  const auto mats = swarm::build_error_matrices(g);

  CHECK(mats.m1(0, 2) == -1.0);
  CHECK(mats.m1(1, 3) == -1.0);
  CHECK(mats.m1.row(0).cwiseAbs().sum() == 1.0);
  CHECK(mats.m1.row(1).cwiseAbs().sum() == 1.0);

  CHECK(mats.m1(2, 0) == doctest::Approx(2.5));
  CHECK(mats.m1(2, 1) == doctest::Approx(-1.5));
  CHECK(mats.m1(2, 2) == doctest::Approx(-2.5));
  CHECK(mats.m1(2, 3) == 0.0);

  CHECK(mats.m2(2, 3) == doctest::Approx(1.5));
  CHECK(mats.m2(3, 2) == doctest::Approx(1.5));
  CHECK(mats.m2.cwiseAbs().sum() == doctest::Approx(3.0));

  CHECK(mats.hurwitz);
}

TEST_CASE("coupling conventions differ only in entry (4,1)") {
  ControlGains g;
  g.a3 = 0.7;
  g.a_hat3 = 2.1;
  const auto peer = swarm::build_error_matrices(g, swarm::CouplingConvention::kPeerGain);
  const auto leader = swarm::build_error_matrices(g, swarm::CouplingConvention::kLeaderGain);
  CHECK(peer.m1(3, 0) == doctest::Approx(-2.1));
  CHECK(leader.m1(3, 0) == doctest::Approx(-0.7));
  Mat4 diff = peer.m1 - leader.m1;
  diff(3, 0) = 0.0;
  CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
  CHECK((peer.m2 - leader.m2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("decoupled followers: zero coupling gains empty M2") {
  ControlGains g;
  g.a_hat2 = g.b_hat2 = g.a_hat3 = g.b_hat3 = 0.0;
  const auto mats = swarm::build_error_matrices(g);
  CHECK(mats.m2.cwiseAbs().maxCoeff() == 0.0);
  CHECK(mats.m1(2, 0) == doctest::Approx(g.a2));
  CHECK(mats.m1(2, 1) == 0.0);
  CHECK(mats.m1(2, 2) == doctest::Approx(-g.b2));
  CHECK(mats.m1(3, 0) == 0.0);
  CHECK(mats.m1(3, 1) == doctest::Approx(g.a3));
  CHECK(mats.m1(3, 3) == doctest::Approx(-g.b3));
}

TEST_CASE("invalid gains are rejected") {
  ControlGains g;
  g.a2 = -1.0;
  CHECK_THROWS_AS(swarm::build_error_matrices(g), std::invalid_argument);
  ControlGains h;
  h.b3 = 0.0;
  CHECK_THROWS_AS(swarm::build_error_matrices(h), std::invalid_argument);
}

TEST_CASE("matrix action matches the scalar error derivatives") {
  swarm::Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const ControlGains g = random_gains(rng);
    const auto mats = swarm::build_error_matrices(g);
    Vec4 e, ed;
    for (int i = 0; i < 4; ++i) {
      e(i) = rng.uniform(-4.0, 4.0);
      ed(i) = rng.uniform(-4.0, 4.0);
    }
    const Vec4 lhs = mats.m1 * e + mats.m2 * ed;
    const Vec4 rhs = oracles::scalar_error_rhs(e, ed, g);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("delay bound on the reference gains") {
  const ControlGains g;
  const auto mats = swarm::build_error_matrices(g);
  const auto bound = swarm::delay_bound(mats, 1.01);

  // Reproduces the published 18.2 ms figure within 5%.
  CHECK(bound.tau_max == doctest::Approx(0.0182).epsilon(0.05));
  CHECK(bound.tau_max <= 1.0 / (2.0 * 1.01));
  CHECK(bound.lambda_max >= 2.0 * 1.01);

  const Mat4 a = mats.m1 + mats.m2;
  const Mat4 res = bound.c * a + a.transpose() * bound.c + Mat4::Identity();
  CHECK(res.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((bound.c - bound.c.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(swarm::jacobi_eigenvalues(bound.c)[0] > 0.0);
}

TEST_CASE("zero coupling makes the ceiling exact") {
  ControlGains g;
  g.a_hat2 = g.b_hat2 = g.a_hat3 = g.b_hat3 = 0.0;
  const auto mats = swarm::build_error_matrices(g);
  for (const double k : {1.01, 1.5, 2.0}) {
    const auto bound = swarm::delay_bound(mats, k);
    CHECK(bound.tau_max == doctest::Approx(1.0 / (2.0 * k)).epsilon(1e-12));
  }
}

TEST_CASE("bound ceiling holds for random gain sets") {
  swarm::Rng rng(5150);
  int checked = 0;
  while (checked < 100) {
    const ControlGains g = random_gains(rng);
    const auto mats = swarm::build_error_matrices(g);
    if (!mats.hurwitz) {
      continue;
    }
    ++checked;
    const double k = rng.uniform(1.01, 3.0);
    const auto bound = swarm::delay_bound(mats, k);
    CHECK(bound.tau_max <= 1.0 / (2.0 * k) + 1e-15);
    CHECK(bound.tau_max > 0.0);
  }
}

TEST_CASE("delay bound rejects bad inputs") {
  const ControlGains g;
  const auto mats = swarm::build_error_matrices(g);
  CHECK_THROWS_AS(swarm::delay_bound(mats, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(swarm::delay_bound(mats, 0.5), std::invalid_argument);

  // A positive but badly skewed gain set whose undelayed matrix is unstable.
  ControlGains bad;
  bad.a2 = 32.4;
  bad.b2 = 0.022;
  bad.a_hat2 = 6.8;
  bad.b_hat2 = 14.3;
  bad.a3 = 15.7;
  bad.b3 = 0.195;
  bad.a_hat3 = 15.4;
  bad.b_hat3 = 0.08;
  const auto unstable = swarm::build_error_matrices(bad);
  CHECK_FALSE(unstable.hurwitz);
  CHECK_THROWS_WITH_AS(swarm::delay_bound(unstable, 1.01),
                       doctest::Contains("undelayed system unstable"),
                       swarm::numerical_error);
}

TEST_CASE("formation requirement equals the single-axis bound") {
  const ControlGains g;
  const double tau = swarm::formation_delay_requirement(g, 1.01);
  const auto bound = swarm::delay_bound(swarm::build_error_matrices(g), 1.01);
  CHECK(tau == bound.tau_max);
}

TEST_CASE("doubling the delayed-coupling gains changes the bound") {
  ControlGains g;
  const double base = swarm::formation_delay_requirement(g, 1.01);
  g.b_hat2 *= 2.0;
  g.b_hat3 *= 2.0;
  const double bumped = swarm::formation_delay_requirement(g, 1.01);
  CHECK(bumped != doctest::Approx(base).epsilon(1e-9));
  CHECK(bumped < base);  // stronger delayed coupling tightens the bound
}

TEST_CASE("reference gains produce a Hurwitz undelayed matrix") {
  const auto mats = swarm::build_error_matrices(ControlGains{});
  const Eigen::Vector4cd eigs = (mats.m1 + mats.m2).eigenvalues();
  CHECK(eigs.real().maxCoeff() < 0.0);
  CHECK(mats.hurwitz);
}
