#include <benchmark/benchmark.h>

#include <swarm/delay_bound.hpp>

namespace {

void BM_BuildErrorMatrices(benchmark::State& state) {
  const swarm::ControlGains gains;
  for (auto _ : state) {
    auto mats = swarm::build_error_matrices(gains);
    benchmark::DoNotOptimize(mats);
  }
}
BENCHMARK(BM_BuildErrorMatrices);

void BM_SolveLyapunov(benchmark::State& state) {
  const auto mats = swarm::build_error_matrices(swarm::ControlGains{});
  const swarm::Mat4 a = mats.m1 + mats.m2;
  for (auto _ : state) {
    auto c = swarm::solve_lyapunov(a);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SolveLyapunov);

void BM_MaxEigenvalueSymmetric(benchmark::State& state) {
  const auto mats = swarm::build_error_matrices(swarm::ControlGains{});
  const swarm::Mat4 a = mats.m1 + mats.m2;
  const swarm::Mat4 c = swarm::solve_lyapunov(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarm::max_eigenvalue_symmetric(c));
  }
}
BENCHMARK(BM_MaxEigenvalueSymmetric);

void BM_DelayBoundPipeline(benchmark::State& state) {
  const swarm::ControlGains gains;
  for (auto _ : state) {
    benchmark::DoNotOptimize(swarm::formation_delay_requirement(gains, 1.01));
  }
}
BENCHMARK(BM_DelayBoundPipeline);

}  // namespace
