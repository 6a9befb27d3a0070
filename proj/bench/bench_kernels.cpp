// Serial reference kernels against their OpenMP versions.
//   ./bench_kernels --benchmark_filter=Summarize

#include <qcc/enumerate.hpp>
#include <qcc/kernels.hpp>

#include <benchmark/benchmark.h>

using namespace qcc;

namespace {

void ExtendSerial(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    const auto &parents = catalog(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::extend_level_serial(n, parents, std::nullopt));
    state.counters["parents"] = static_cast<double>(parents.size());
}

void ExtendParallel(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    kernels::set_thread_count(static_cast<int>(state.range(1)));
    const auto &parents = catalog(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::extend_level_parallel(n, parents, std::nullopt));
    state.counters["parents"] = static_cast<double>(parents.size());
}

void SummarizeSerial(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    const auto &codes = catalog(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::summarize_serial(n, codes));
    state.counters["graphs"] = static_cast<double>(codes.size());
}

void SummarizeParallel(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    kernels::set_thread_count(static_cast<int>(state.range(1)));
    const auto &codes = catalog(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::summarize_parallel(n, codes));
    state.counters["graphs"] = static_cast<double>(codes.size());
}

void MinOmegaSerial(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    const auto &codes = catalog(n);
    for (auto _ : state)
        for (int c = 1; c <= n; ++c)
            benchmark::DoNotOptimize(kernels::min_omega_with_chi_serial(n, codes, c));
}

void MinOmegaParallel(benchmark::State &state)
{
    int n = static_cast<int>(state.range(0));
    kernels::set_thread_count(static_cast<int>(state.range(1)));
    const auto &codes = catalog(n);
    for (auto _ : state)
        for (int c = 1; c <= n; ++c)
            benchmark::DoNotOptimize(kernels::min_omega_with_chi_parallel(n, codes, c));
}

} // namespace

BENCHMARK(ExtendSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(ExtendParallel)->ArgsProduct({{6, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(SummarizeSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(SummarizeParallel)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(MinOmegaSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(MinOmegaParallel)->ArgsProduct({{8}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
