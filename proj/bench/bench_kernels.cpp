#include "ate/fft.hpp"
#include "ate/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using ate::kernels::Amplitude;
namespace k = ate::kernels;

std::vector<Amplitude> random_amplitudes(std::size_t n) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> normal;
    std::vector<Amplitude> v(n);
    for (auto& a : v)
        a = {normal(rng), normal(rng)};
    return v;
}

// Two electrons on a 2^q grid: the transform runs along the slower axis.
template <bool Parallel>
void BM_CenteredTransform(benchmark::State& state) {
    const auto q = static_cast<unsigned>(state.range(0));
    const std::size_t n = std::size_t{1} << q;
    auto amps = random_amplitudes(n * n);
    const ate::FftPlan plan(n);
    const k::AxisGeometry axis{n, n, n * n};
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::centered_transform(amps, axis, plan, false);
        else
            k::serial::centered_transform(amps, axis, plan, false);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <bool Parallel>
void BM_ApplyPhase(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    std::vector<double> diag(n, 0.25);
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::apply_phase(amps, diag, 0.1);
        else
            k::serial::apply_phase(amps, diag, 0.1);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_RxAll(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : state) {
        if constexpr (Parallel)
            k::omp::rx_all(amps, 2, -0.02);
        else
            k::serial::rx_all(amps, 2, -0.02);
        benchmark::DoNotOptimize(amps.data());
    }
}

template <bool Parallel>
void BM_NormSquared(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto amps = random_amplitudes(n);
    for (auto _ : state) {
        if constexpr (Parallel)
            benchmark::DoNotOptimize(k::omp::norm_squared(amps));
        else
            benchmark::DoNotOptimize(k::serial::norm_squared(amps));
    }
}

} // namespace

BENCHMARK(BM_CenteredTransform<false>)->DenseRange(6, 10, 2);
BENCHMARK(BM_CenteredTransform<true>)->DenseRange(6, 10, 2);
BENCHMARK(BM_ApplyPhase<false>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_ApplyPhase<true>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_RxAll<false>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_RxAll<true>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_NormSquared<false>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_NormSquared<true>)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
