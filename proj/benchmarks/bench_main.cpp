#include <benchmark/benchmark.h>

#include "sternkit/regularity.hpp"
#include "sternkit/sequences.hpp"
#include "sternkit/series.hpp"
#include "sternkit/verify.hpp"

using namespace sternkit;

static void BM_SternMemo(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        SequenceCache cache(SequenceKind::stern);
        for (std::uint64_t n = 0; n < limit; ++n) benchmark::DoNotOptimize(cache.value(n));
    }
}
BENCHMARK(BM_SternMemo)->Arg(1 << 12)->Arg(1 << 16);

static void BM_SternDigits(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        for (std::uint64_t n = 0; n < limit; ++n) benchmark::DoNotOptimize(stern_by_digits(n));
    }
}
BENCHMARK(BM_SternDigits)->Arg(1 << 12)->Arg(1 << 16);

static void BM_SeriesMultiply(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const IntSeries a = stern_series(order), b = twisted_series(order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(256)->Arg(1024);

static void BM_SeriesDivide(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const IntSeries num = twisted_series(order), den = shifted_stern_series(order);
    for (auto _ : state) benchmark::DoNotOptimize(div_exact(num, den));
}
BENCHMARK(BM_SeriesDivide)->Arg(256)->Arg(1024);

static void BM_InfiniteProduct(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(infinite_product(Polynomial{1, 1, 1}, 2, order));
}
BENCHMARK(BM_InfiniteProduct)->Arg(1024)->Arg(4096);

static void BM_HSeries(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(h_series(order));
}
BENCHMARK(BM_HSeries)->Arg(512)->Arg(2048);

static void BM_KernelRank(benchmark::State& state) {
    const IntSeries h = h_series(2048);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_rank("H", h.coefficients(), 2, 6, 2048));
}
BENCHMARK(BM_KernelRank);

static void BM_IdentitySweep(benchmark::State& state) {
    const auto e_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_identity("STID-T3", e_max, RangePolicy::printed_range));
}
BENCHMARK(BM_IdentitySweep)->Arg(10)->Arg(12);
BENCHMARK_MAIN();
