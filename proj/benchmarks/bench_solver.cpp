#include <benchmark/benchmark.h>

#include "blocksieve/oracle.hpp"
#include "blocksieve/solver.hpp"

using namespace blocksieve;

static void BM_Solve(benchmark::State& state) {
  const Dim r = state.range(0);
  const Dim n = state.range(1) * r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve({n, r, ModeFlags::nsp(), std::nullopt}));
  }
}
BENCHMARK(BM_Solve)->Args({3, 14})->Args({3, 15})->Args({3, 19})->Args({5, 20})->Args({7, 21});

static void BM_Scan(benchmark::State& state) {
  SolverOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(state.range(0), 20, ModeFlags::nsp(), opts));
  }
}
BENCHMARK(BM_Scan)->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_solve(state.range(0), state.range(1), ModeFlags::nsp()));
  }
}
BENCHMARK(BM_Oracle)->Args({42, 3})->Args({60, 2})->Unit(benchmark::kMillisecond);
