#include <benchmark/benchmark.h>

#include "smax/circuits.hpp"
#include "smax/error.hpp"
#include "smax/generator.hpp"

namespace {

smax::QuadratureConfig single_level(int res) {
    smax::QuadratureConfig cfg;
    cfg.resolution = res;
    cfg.refine = false;
    return cfg;
}

void BM_ErrorProbability_Serial(benchmark::State& state) {
    const auto cfg = single_level(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::expected_error_probability(16, 10000, cfg, smax::Execution::Serial));
    }
}
BENCHMARK(BM_ErrorProbability_Serial)->Arg(256)->Arg(512);

void BM_ErrorProbability_OpenMP(benchmark::State& state) {
    const auto cfg = single_level(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::expected_error_probability(16, 10000, cfg, smax::Execution::OpenMP));
    }
}
BENCHMARK(BM_ErrorProbability_OpenMP)->Arg(256)->Arg(512);

void BM_AbsError_Li_OpenMP(benchmark::State& state) {
    const auto cfg = single_level(512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::expected_abs_error(smax::Architecture::Li, 16, cfg));
    }
}
BENCHMARK(BM_AbsError_Li_OpenMP);

void BM_MonteCarlo_Serial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::monte_carlo_error_serial(10000, 15, state.range(0), 1));
    }
}
BENCHMARK(BM_MonteCarlo_Serial)->Arg(100);

void BM_MonteCarlo_OpenMP(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::monte_carlo_error(10000, 15, state.range(0), 1));
    }
}
BENCHMARK(BM_MonteCarlo_OpenMP)->Arg(100);

void BM_SmaxNovel(benchmark::State& state) {
    const smax::StreamGenerator gen{};
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = smax::generate(0.6, n, gen, 1);
    const auto b = smax::generate(0.4, n, gen, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::smax_novel(a, b, 15));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmaxNovel)->Arg(1000000);

void BM_SmaxYu(benchmark::State& state) {
    const smax::StreamGenerator gen{};
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = smax::generate(0.6, n, gen, 1);
    const auto b = smax::generate(0.4, n, gen, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::smax_yu(a, b, 16));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmaxYu)->Arg(1000000);

void BM_Generate(benchmark::State& state) {
    const smax::StreamGenerator gen{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(smax::generate(0.5, static_cast<std::size_t>(state.range(0)), gen, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
