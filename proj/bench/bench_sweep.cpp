// Serial reference vs OpenMP sweep over odd p.

#include <benchmark/benchmark.h>

#include "lensfr/classify.hpp"
#include "lensfr/sweep.hpp"

namespace {

void BM_VerifySerial(benchmark::State& state) {
    for (auto _ : state) {
        auto report = lensfr::verify_range(state.range(0), lensfr::Execution::Serial);
        benchmark::DoNotOptimize(report.checks_run);
    }
}

void BM_VerifyParallel(benchmark::State& state) {
    for (auto _ : state) {
        auto report = lensfr::verify_range(state.range(0), lensfr::Execution::Parallel);
        benchmark::DoNotOptimize(report.checks_run);
    }
    state.counters["threads"] = lensfr::parallel_workers();
}

void BM_TableSerial(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = lensfr::framing_table(3, state.range(0), lensfr::Execution::Serial);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_TableParallel(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = lensfr::framing_table(3, state.range(0), lensfr::Execution::Parallel);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_PrimeClassification(benchmark::State& state) {
    const lensfr::Modulus p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lensfr::verify_prime_classification(p));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(99)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(99)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Arg(199)->Arg(999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(199)->Arg(999)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeClassification)->Arg(101)->Arg(997)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
