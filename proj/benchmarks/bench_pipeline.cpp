#include <benchmark/benchmark.h>

#include "isharp/report.hpp"

using namespace isharp;

namespace {

void BM_TrefoilReport(benchmark::State& state) {
    const KnotInput input = KnotInput::torus(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(run(input, {}).dim_isharp_c);
}

void BM_TorusReport(benchmark::State& state) {
    const KnotInput input = KnotInput::torus(2, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run(input, {}).dim_isharp_c);
}

void BM_TorusAlexander(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(torus_knot_alexander(state.range(0), state.range(0) + 1));
}

void BM_BatchTorusKnots(benchmark::State& state) {
    std::vector<std::string> lines;
    for (long q = 3; q <= 2 * state.range(0) + 1; q += 2)
        lines.push_back("torus 2 " + std::to_string(q));
    for (auto _ : state) benchmark::DoNotOptimize(run_batch(lines, {}).size());
}

}  // namespace

BENCHMARK(BM_TrefoilReport);
BENCHMARK(BM_TorusReport)->Arg(9)->Arg(25)->Arg(49);
BENCHMARK(BM_TorusAlexander)->Arg(10)->Arg(30);
BENCHMARK(BM_BatchTorusKnots)->Arg(10)->Arg(25);

BENCHMARK_MAIN();
