#include "smartmine/analytic.hpp"
#include "smartmine/engine.hpp"
#include "smartmine/optimizer.hpp"
#include "smartmine/security.hpp"

#include <benchmark/benchmark.h>

namespace {

smartmine::Scenario make_scenario(std::size_t miners) {
  smartmine::Scenario sc;
  sc.coin.tau = 600;
  for (std::size_t i = 0; i < miners; ++i)
    sc.miners.push_back({"m" + std::to_string(i), 1.0 + static_cast<double>(i % 7), 0.01, 0.001});
  sc.coin.w = smartmine::calibrate_reward(sc.miners, sc.coin.tau, 0.0);
  sc.schedules.push_back(smartmine::smarter_schedule(sc.miners[0], 0.5 * sc.miners[0].m));
  return sc;
}

}  // namespace

static void BM_Run(benchmark::State& state) {
  const auto sc = make_scenario(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::run(sc, 1000));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Run)->Arg(2)->Arg(16)->Arg(128);

static void BM_PeriodicUtility(benchmark::State& state) {
  const auto sc = make_scenario(16);
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::periodic_utility(sc));
}
BENCHMARK(BM_PeriodicUtility);

static void BM_SmarterUtility(benchmark::State& state) {
  const auto c = smartmine::canonical_case(0.2, 0.15);
  double delta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smartmine::smarter_utility(c.ctx, c.miner, delta));
    delta = delta < 0.19 ? delta + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_SmarterUtility);

static void BM_OptimalIdle(benchmark::State& state) {
  const auto c = smartmine::canonical_case(0.2, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::optimal_idle(c.ctx, c.miner));
}
BENCHMARK(BM_OptimalIdle);

static void BM_BruteForceIdle(benchmark::State& state) {
  const auto c = smartmine::canonical_case(0.2, 0.15);
  const auto resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::brute_force_idle(c.ctx, c.miner, resolution));
}
BENCHMARK(BM_BruteForceIdle)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = smartmine::centered_grid(n, n);
  const auto mode = state.range(1) == 0 ? smartmine::SweepMode::smart : smartmine::SweepMode::smarter_optimal;
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::sweep(grid, mode));
}
BENCHMARK(BM_Sweep)->Args({50, 0})->Args({200, 0})->Args({50, 1})->Unit(benchmark::kMillisecond);

static void BM_SecurityReport(benchmark::State& state) {
  const auto sc = make_scenario(16);
  for (auto _ : state) benchmark::DoNotOptimize(smartmine::security_report(sc));
}
BENCHMARK(BM_SecurityReport);

BENCHMARK_MAIN();
