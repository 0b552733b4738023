#include "atomique/array_mapper.hpp"
#include "atomique/fidelity.hpp"
#include "atomique/pipeline.hpp"
#include "atomique/workloads.hpp"

#include <benchmark/benchmark.h>

using namespace atomique;

static void BM_GreedyMaxKCut(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = toBasis(genRandomCircuit(n, 10 * n, 1));
  const auto g = gateFrequencyGraph(c, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedyMaxKCut(g, 3, {100, 100, 100}));
  }
}
BENCHMARK(BM_GreedyMaxKCut)->Arg(50)->Arg(100)->Arg(300);

static void BM_SwapRouter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = toBasis(genRandomCircuit(n, 10 * n, 2));
  const ArchConfig arch;
  const auto caps = arch.capacities();
  const auto a = bindPartitionsToArrays(
      greedyMaxKCut(gateFrequencyGraph(c, 0.9), 3, caps), caps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(routeInterArray(c, a));
  }
}
BENCHMARK(BM_SwapRouter)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Compile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = genRandomCircuit(n, 10 * n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(c, DeviceConfig{}));
  }
}
BENCHMARK(BM_Compile)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ApplySchedule(benchmark::State& state) {
  const auto r = compile(genQsimRandom(40, 0.5, 10, 1), DeviceConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(applySchedule(r.schedule, r.hw));
  }
}
BENCHMARK(BM_ApplySchedule);

BENCHMARK_MAIN();
