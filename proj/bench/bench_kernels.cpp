// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "tilecount/matrix.hpp"
#include "tilecount/skinny.hpp"
#include "tilecount/transfer.hpp"

using namespace tilecount;

namespace {

void BM_MatMulParallel(benchmark::State& state) {
  const auto tm = build_tm(static_cast<int>(state.range(0)), TilingMode::MonomerDimer);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(tm->counts, tm->counts));
}

void BM_MatMulSerial(benchmark::State& state) {
  const auto tm = build_tm(static_cast<int>(state.range(0)), TilingMode::MonomerDimer);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul_serial(tm->counts, tm->counts));
}

void BM_PolyMatMulParallel(benchmark::State& state) {
  const auto tm = build_tm(6, TilingMode::MonomerDimer, true);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(tm->weights, tm->weights));
}

void BM_PolyMatMulSerial(benchmark::State& state) {
  const auto tm = build_tm(6, TilingMode::MonomerDimer, true);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul_serial(tm->weights, tm->weights));
}

void BM_FrameTableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frame_table(2, 2, 2, 2, 14, 14, TilingMode::MonomerDimer));
}

void BM_FrameTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frame_table_serial(2, 2, 2, 2, 14, 14, TilingMode::MonomerDimer));
}

void BM_BuildTmSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tm_serial(8, TilingMode::MonomerDimer, true));
}

}  // namespace

BENCHMARK(BM_MatMulParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MatMulSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PolyMatMulParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PolyMatMulSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FrameTableParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FrameTableSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildTmSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
