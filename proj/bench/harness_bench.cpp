// Serial reference loop (workers = 1) against the OpenMP work-unit loop.

#include <benchmark/benchmark.h>

#include "skewsign/verify.hpp"

using namespace skewsign;

namespace {

RunConfig config(const benchmark::State& state) { return RunConfig{static_cast<int>(state.range(0)), true}; }

void BM_TheoremMain(benchmark::State& state) {
    const auto cfg = config(state);
    for (auto _ : state) benchmark::DoNotOptimize(check_theorem_main(Partition({3, 2, 1}), 4, cfg));
}

void BM_OuterSum(benchmark::State& state) {
    const auto cfg = config(state);
    for (auto _ : state) benchmark::DoNotOptimize(signed_outer_sum(Partition({3, 1}), 6, cfg));
}

void BM_SignedSum(benchmark::State& state) {
    const auto cfg = config(state);
    for (auto _ : state) benchmark::DoNotOptimize(check_signed_sum(7, cfg));
}

}  // namespace

// Arg 1 is the serial reference; 0 uses every OpenMP thread.
BENCHMARK(BM_TheoremMain)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OuterSum)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignedSum)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
