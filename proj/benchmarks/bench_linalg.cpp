#include <benchmark/benchmark.h>

#include "isharp/linalg.hpp"
#include "isharp/rng.hpp"
#include "isharp/staircase.hpp"

using namespace isharp;

namespace {

RatMat staircase_sum_matrix(long k) {
    std::vector<long> exps;
    for (long i = 0; i <= k; ++i) exps.push_back(i);
    const D1Pair d1 = extract_d1(build_staircase(StaircaseSpec(exps)));
    return (d1.plus + d1.minus).matrix();
}

IntMat random_matrix(long n, long bound, std::uint64_t seed) {
    Rng rng(seed);
    IntMat m(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            rng.range(-bound, bound);
    return m;
}

void BM_BareissRankStaircase(benchmark::State& state) {
    const RatMat m = staircase_sum_matrix(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_BareissRankDense(benchmark::State& state) {
    const IntMat m = random_matrix(state.range(0), 5, 99);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_SmithNormalForm(benchmark::State& state) {
    const IntMat m = random_matrix(state.range(0), 9, 7);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).divisors.size());
}

void BM_RankMod2(benchmark::State& state) {
    const IntMat m = random_matrix(state.range(0), 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod2(m));
}

}  // namespace

BENCHMARK(BM_BareissRankStaircase)->Arg(10)->Arg(50)->Arg(200);
BENCHMARK(BM_BareissRankDense)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_RankMod2)->Arg(32)->Arg(128);
