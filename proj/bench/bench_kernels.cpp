// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nomaec/ec/monte_carlo.hpp"
#include "nomaec/sweep/sweep.hpp"

using namespace nomaec;

namespace {

const auto kSnr = ec::Snr::from_db(10.0);
const auto kPa = ec::PowerAllocation::from_weak(0.2);
const auto kQos = ec::QosExponent::from_beta(-1.0);

ec::McConfig mc_config(benchmark::State& state) {
  ec::McConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(0));
  cfg.seed = 7;
  return cfg;
}

void BM_McKernelSerial(benchmark::State& state) {
  const auto cfg = mc_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(ec::mc_kernel_serial(kSnr, kPa, kQos, kQos, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_McKernelParallel(benchmark::State& state) {
  const auto cfg = mc_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(ec::mc_kernel_parallel(kSnr, kPa, kQos, kQos, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

sweep::SweepConfig sweep_config(ec::EcMethod method) {
  sweep::SweepConfig cfg;
  cfg.rho_db_grid = {-10, 0, 10, 20, 30, 40};
  cfg.beta1_grid = {-1, -2};
  cfg.beta2_grid = {-1, -2};
  cfg.p1_grid = {0.2};
  cfg.method = method;
  cfg.mc_samples = 100'000;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = sweep_config(static_cast<ec::EcMethod>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep::run_sweep_serial(cfg));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = sweep_config(static_cast<ec::EcMethod>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep::run_sweep(cfg));
}

constexpr auto kQuadrature = static_cast<long>(ec::EcMethod::quadrature);
constexpr auto kMonteCarlo = static_cast<long>(ec::EcMethod::monte_carlo);

}  // namespace

BENCHMARK(BM_McKernelSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McKernelParallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(kQuadrature)->Arg(kMonteCarlo)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(kQuadrature)->Arg(kMonteCarlo)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
