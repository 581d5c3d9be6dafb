// Serial reference vs OpenMP sweep. Arg 0 = Serial, 1 = Parallel.

#include <benchmark/benchmark.h>

#include "antipath/sweep.hpp"

using namespace antipath;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void report(benchmark::State& state, const SweepReport& r) {
  state.counters["instances"] = static_cast<double>(r.instances);
  state.counters["failures"] = static_cast<double>(r.failures.size());
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_ExhaustiveFind(benchmark::State& state) {
  SweepReport r;
  for (auto _ : state) {
    r = sweep_exhaustive_find(5, 3, exec_of(state));
    benchmark::DoNotOptimize(r.found);
  }
  report(state, r);
}

void BM_ExhaustiveLongest(benchmark::State& state) {
  SweepReport r;
  for (auto _ : state) {
    r = sweep_exhaustive_longest(5, 6, exec_of(state));
    benchmark::DoNotOptimize(r.checks);
  }
  report(state, r);
}

void BM_RandomTournaments(benchmark::State& state) {
  SweepReport r;
  for (auto _ : state) {
    r = sweep_random_tournaments(21, 200, 20240601, exec_of(state));
    benchmark::DoNotOptimize(r.found);
  }
  report(state, r);
}

void BM_Dense(benchmark::State& state) {
  SweepReport r;
  for (auto _ : state) {
    r = sweep_dense(40, 8, 50, 31337, exec_of(state));
    benchmark::DoNotOptimize(r.found);
  }
  report(state, r);
}

}  // namespace

BENCHMARK(BM_ExhaustiveFind)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveLongest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomTournaments)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
