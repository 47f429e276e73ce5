#include <benchmark/benchmark.h>

#include <swarm/integrator.hpp>
#include <swarm/random.hpp>

namespace {

swarm::AxisErrors seeded_errors(std::uint64_t seed) {
  swarm::Rng rng(seed);
  swarm::AxisErrors e;
  for (int i = 0; i < 4; ++i) {
    e.x(i) = rng.uniform(-5, 5);
    e.y(i) = rng.uniform(-5, 5);
  }
  return e;
}

void BM_DdeStep(benchmark::State& state) {
  const auto mats = swarm::build_error_matrices(swarm::ControlGains{});
  swarm::DdeStepper stepper(mats, seeded_errors(1), 5e-4, 0.02);
  const auto tau_at = [](double) { return 0.018; };
  for (auto _ : state) {
    stepper.step(tau_at);
  }
  benchmark::DoNotOptimize(stepper.state());
}
BENCHMARK(BM_DdeStep);

void BM_IntegrateOneSecond(benchmark::State& state) {
  const auto mats = swarm::build_error_matrices(swarm::ControlGains{});
  const auto delay = swarm::DelayProcess::uniform_resampled(0.018, 0.01, 7);
  const auto e0 = seeded_errors(2);
  for (auto _ : state) {
    auto traj = swarm::integrate_dde(mats, e0, delay, 5e-4, 1.0);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_IntegrateOneSecond);

}  // namespace
