// Serial reference vs OpenMP kernel for each parallel hot path.
#include <benchmark/benchmark.h>

#include "eulerref/exact_core.hpp"
#include "eulerref/oracle.hpp"
#include "eulerref/stein.hpp"

namespace {

using eulerref::Exec;

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_ClosedFormTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = eulerref::build_refined_table(n, eulerref::TableMethod::closed_form, exec_of(state));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ClosedFormTable)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EnumerateJoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto j = eulerref::enumerate_joint(n, eulerref::kDefaultEnumerationCap, exec_of(state));
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_EnumerateJoint)->ArgsProduct({{8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ExactJointDD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = eulerref::exact_joint_dd(n, eulerref::kDefaultPairCap, exec_of(state));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ExactJointDD)->ArgsProduct({{7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MonteCarloDrift(benchmark::State& state) {
  const int workers = eulerref::max_threads();
  for (auto _ : state) {
    auto r = eulerref::mc_drift(50, 24, 20000, 42, workers, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MonteCarloDrift)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
