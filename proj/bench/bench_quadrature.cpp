// Serial reference against the OpenMP kernels for the trapezoid sums and the
// verification sweep.

#include "biharm/conjecture.hpp"
#include "biharm/numeric.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

const biharm::CompiledKernel& kernel() {
    static const biharm::CompiledKernel k(biharm::build({4, biharm::KernelKind::F}));
    return k;
}

constexpr double kRadius = 0.99;

void BM_IntegralMeanSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::serial::integral_mean(kernel(), kRadius, n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IntegralMeanParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::integral_mean(kernel(), kRadius, n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AbsMeanSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::serial::abs_mean(kernel(), kRadius, n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AbsMeanParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::abs_mean(kernel(), kRadius, n));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CosineCoefficientsSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::serial::cosine_coefficients(kernel(), kRadius, 8, n));
    }
}

void BM_CosineCoefficientsParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::cosine_coefficients(kernel(), kRadius, 8, n));
    }
}

void BM_VerifySweepSerial(benchmark::State& state) {
    const int gamma_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::verify_sweep_serial(gamma_max));
    }
}

void BM_VerifySweepParallel(benchmark::State& state) {
    const int gamma_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biharm::verify_sweep(gamma_max, omp_get_max_threads()));
    }
}

} // namespace

BENCHMARK(BM_IntegralMeanSerial)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_IntegralMeanParallel)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_AbsMeanSerial)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_AbsMeanParallel)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_CosineCoefficientsSerial)->Arg(1 << 16);
BENCHMARK(BM_CosineCoefficientsParallel)->Arg(1 << 16);
BENCHMARK(BM_VerifySweepSerial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweepParallel)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
