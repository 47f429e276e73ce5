#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include <swarm/wireless.hpp>

using swarm::LinkBudget;
using swarm::WirelessParams;

TEST_CASE("link delay closed-form points") {
  const WirelessParams w;  // S = 3200 bits, omega = 20 MHz
  CHECK(swarm::link_delay(1.0, w) == doctest::Approx(160e-6).epsilon(1e-12));
  CHECK(swarm::link_delay(3.0, w) == doctest::Approx(80e-6).epsilon(1e-12));
  CHECK(std::isinf(swarm::link_delay(0.0, w)));
  CHECK_THROWS_AS(swarm::link_delay(-0.1, w), std::invalid_argument);
}

TEST_CASE("sinr threshold closed-form points") {
  const WirelessParams w;
  // S/(omega tau) = 1 at tau = 160 us.
  CHECK(swarm::sinr_threshold(160e-6, w) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(swarm::sinr_threshold(0.0182, w) == doctest::Approx(6.114e-3).epsilon(1e-3));
  CHECK(swarm::sinr_threshold(1e6, w) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(swarm::sinr_threshold(0.0, w), std::invalid_argument);
}

TEST_CASE("delay and threshold are inverse maps") {
  const WirelessParams w;
  for (double sinr = 1e-6; sinr < 1e6; sinr *= 3.7) {
    const double tau = swarm::link_delay(sinr, w);
    CHECK(swarm::sinr_threshold(tau, w) == doctest::Approx(sinr).epsilon(1e-12));
  }
}

TEST_CASE("eta for the reference Nakagami order") {
  WirelessParams w;
  CHECK(w.eta() == doctest::Approx(1.650964).epsilon(1e-6));
  w.beta = 1;
  CHECK(w.eta() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("params validation") {
  WirelessParams w;
  w.beta = 0;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = WirelessParams{};
  w.alpha = 2.0;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = WirelessParams{};
  w.p_t = 0.0;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
}

TEST_CASE("laplace transform edges") {
  const WirelessParams w;
  CHECK(swarm::interference_laplace(0.0, w) == 1.0);
  WirelessParams empty = w;
  empty.density_per_m2 = 0.0;
  CHECK(swarm::interference_laplace(3.0, empty) == 1.0);
  WirelessParams thin = w;
  thin.alpha = 1.9;
  CHECK_THROWS_AS(swarm::interference_laplace(1.0, thin), std::invalid_argument);
}

TEST_CASE("laplace transform reference value") {
  WirelessParams w;  // alpha = 3, P_t = 0.1 W
  w.density_per_m2 = 0.05;
  const double n = 0.6460 / w.p_t;  // s = n P_t = 0.6460
  const double l = swarm::interference_laplace(n, w);
  CHECK(l == doctest::Approx(0.7530).epsilon(2e-4));
  CHECK(-std::log(l) == doctest::Approx(0.2838).epsilon(5e-4));
}

TEST_CASE("laplace closed form matches quadrature over a log grid") {
  for (const double alpha : {2.5, 3.0, 4.0}) {
    WirelessParams w;
    w.alpha = alpha;
    w.density_per_m2 = 0.05;
    for (double n = 1e-4; n <= 1e2 * 1.0000001; n *= 10.0) {
      const double closed = swarm::interference_laplace(n, w);
      const double quad = swarm::interference_laplace_quadrature(n, w, 1e-9);
      CHECK(std::abs(closed - quad) / closed <= 1e-6);
    }
  }
}

TEST_CASE("reliability anchor values at the published delay requirement") {
  WirelessParams w;
  w.density_per_m2 = 0.05;
  const double tau_req = 0.0182;

  const auto at4 = swarm::link_reliability(LinkBudget::for_required_delay(4.0, tau_req, w), w);
  CHECK(at4.value == doctest::Approx(0.901).epsilon(0.005 / 0.901));
  CHECK(at4.method == swarm::ReliabilityMethod::kAnalytic);

  const auto at10 =
      swarm::link_reliability(LinkBudget::for_required_delay(10.0, tau_req, w), w);
  CHECK(at10.value == doctest::Approx(0.355).epsilon(0.02 / 0.355));
}

TEST_CASE("reliability approaches 1 with no interference and no noise") {
  WirelessParams w;
  w.density_per_m2 = 0.0;
  w.noise_psd = 0.0;
  const auto r = swarm::link_reliability(LinkBudget::for_required_delay(4.0, 0.0182, w), w);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reliability stays in range and is monotone") {
  WirelessParams w;
  for (const double density : {0.0, 0.01, 0.05, 0.1, 0.5}) {
    w.density_per_m2 = density;
    double prev = 1.1;
    for (double d = 0.5; d <= 14.0; d += 0.25) {
      const auto r = swarm::link_reliability(LinkBudget::for_required_delay(d, 0.0182, w), w);
      CHECK(r.value >= 0.0);
      CHECK(r.value <= 1.0);
      CHECK(r.value <= prev + 1e-12);
      prev = r.value;
    }
  }

  // Non-increasing in density at fixed spacing.
  double prev = 1.1;
  for (const double density : {0.0, 0.005, 0.01, 0.05, 0.1, 0.2}) {
    w.density_per_m2 = density;
    const auto r = swarm::link_reliability(LinkBudget::for_required_delay(4.0, 0.0182, w), w);
    CHECK(r.value <= prev + 1e-12);
    prev = r.value;
  }

  // Non-increasing in the SINR threshold (shorter required delay).
  w.density_per_m2 = 0.05;
  prev = 1.1;
  for (double tau = 0.04; tau >= 0.002; tau -= 0.002) {
    const auto r = swarm::link_reliability(LinkBudget::for_required_delay(4.0, tau, w), w);
    CHECK(r.value <= prev + 1e-12);
    prev = r.value;
  }
}

TEST_CASE("interference-limited reliability is transmit-power invariant") {
  WirelessParams w;
  w.noise_psd = 0.0;
  w.density_per_m2 = 0.05;
  const double reference = [&] {
    WirelessParams p = w;
    p.p_t = 0.1;
    return swarm::link_reliability(LinkBudget::for_required_delay(6.0, 0.0182, p), p).value;
  }();
  for (const double p_t : {1e-3, 0.1, 10.0}) {
    WirelessParams p = w;
    p.p_t = p_t;
    const auto r = swarm::link_reliability(LinkBudget::for_required_delay(6.0, 0.0182, p), p);
    CHECK(std::abs(r.value - reference) < 1e-12);
  }
}

TEST_CASE("link budget validation") {
  const WirelessParams w;
  CHECK_THROWS_AS(LinkBudget::for_required_delay(0.0, 0.0182, w), std::invalid_argument);
  CHECK_THROWS_AS(LinkBudget::for_required_delay(4.0, 0.0, w), std::invalid_argument);
  const auto b = LinkBudget::for_required_delay(4.0, 0.0182, w);
  CHECK(b.sinr_threshold > 0.0);
  CHECK(b.distance == 4.0);
}
