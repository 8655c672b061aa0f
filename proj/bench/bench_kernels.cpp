#include <benchmark/benchmark.h>

#include <random>

#include "dimspec/eigen.hpp"
#include "dimspec/sweep.hpp"

namespace {

using namespace dimspec;

SymMatrix random_adjacency(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.3);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, coin(rng) ? 1.0 : 0.0);
  }
  return m;
}

void BM_JacobiParallel(benchmark::State& state) {
  const SymMatrix m = random_adjacency(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(m));
}

void BM_JacobiReference(benchmark::State& state) {
  const SymMatrix m = random_adjacency(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym_reference(m));
}

BENCHMARK(BM_JacobiParallel)->Arg(8)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_JacobiReference)->Arg(8)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

SweepConfig sweep_config(int jobs) {
  SweepConfig c;
  c.mode = SweepMode::Random;
  c.n = 8;
  c.count = 500;
  c.jobs = jobs;
  return c;
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepConfig c = sweep_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig c = sweep_config(1);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}

BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
