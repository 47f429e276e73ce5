#include <benchmark/benchmark.h>

#include <swarm/montecarlo.hpp>
#include <swarm/wireless.hpp>

namespace {

void BM_AnalyticReliability(benchmark::State& state) {
  swarm::WirelessParams w;
  w.density_per_m2 = 0.05;
  const auto budget = swarm::LinkBudget::for_required_delay(4.0, 0.0182, w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarm::link_reliability(budget, w));
  }
}
BENCHMARK(BM_AnalyticReliability);

void BM_LaplaceQuadrature(benchmark::State& state) {
  swarm::WirelessParams w;
  w.density_per_m2 = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarm::interference_laplace_quadrature(6.5, w, 1e-9));
  }
}
BENCHMARK(BM_LaplaceQuadrature);

void BM_InterferenceDraw(benchmark::State& state) {
  swarm::WirelessParams w;
  w.density_per_m2 = static_cast<double>(state.range(0)) / 100.0;
  const swarm::InterferenceSampler sampler(w);
  swarm::Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.draw(rng));
  }
}
BENCHMARK(BM_InterferenceDraw)->Arg(1)->Arg(5)->Arg(10);

void BM_McReliability10k(benchmark::State& state) {
  swarm::WirelessParams w;
  w.density_per_m2 = 0.05;
  const auto budget = swarm::LinkBudget::for_required_delay(4.0, 0.0182, w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarm::mc_reliability(budget, w, 10000, 1, 1));
  }
}
BENCHMARK(BM_McReliability10k);

}  // namespace
