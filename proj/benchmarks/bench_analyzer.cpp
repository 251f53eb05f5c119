#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "blocksieve/analyzer.hpp"

using namespace blocksieve;

namespace {

Coalgebra load(const char* name) {
  std::ifstream in(std::string(BLOCKSIEVE_CORPUS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coalgebra(ss.str());
}

}  // namespace

static void BM_Analyze(benchmark::State& state, const char* name) {
  const auto c = load(name);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c, ModeFlags{}));
}
BENCHMARK_CAPTURE(BM_Analyze, sweedler4, "sweedler4.json")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, sweedler4_squared, "sweedler4_squared.json")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, dual_s3, "dual_group_algebra_s3.json")->Unit(benchmark::kMillisecond);

static void BM_Filtration(benchmark::State& state) {
  const auto c = load("sweedler4_squared.json");
  for (auto _ : state) benchmark::DoNotOptimize(coradical_filtration(c));
}
BENCHMARK(BM_Filtration)->Unit(benchmark::kMillisecond);
