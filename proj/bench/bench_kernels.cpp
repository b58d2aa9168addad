// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "modserre/kernels.hpp"
#include "modserre/pipeline.hpp"
#include "modserre/table.hpp"
#include "modserre/verify.hpp"

using namespace modserre;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_multiply_series(benchmark::State& state)
{
    const Truncation trunc(5);
    std::mt19937_64 rng(1);
    SymSeries a(trunc);
    SymSeries b(trunc);
    for (int i = 0; i < 8; ++i) {
        a += random_series(rng, trunc, 12);
        b += random_series(rng, trunc, 12);
    }
    const Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::multiply_series(a.layers(), b.layers(), trunc, exec));
    }
    label(state);
}

void BM_schur_expansions(benchmark::State& state)
{
    const auto shapes = partitions_of(static_cast<int>(state.range(1)));
    const Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::schur_expansions(shapes, exec));
    }
    label(state);
}

void BM_schur_coefficients(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(1));
    const auto shapes = partitions_of(n);
    SymFunction f;
    int i = 0;
    for (const auto& rho : shapes) {
        ++i;
        f.add_term(rho, HodgePoly::q_power(i % 5, i));
    }
    const Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::schur_coefficients(f, shapes, exec));
    }
    label(state);
}

void BM_pipeline(benchmark::State& state)
{
    const ModuliTable table = embedded_dataset();
    kernels::set_default_exec(exec_of(state));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(table, PipelineConfig{}));
    }
    label(state);
}

} // namespace

BENCHMARK(BM_multiply_series)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schur_expansions)->Args({0, 8})->Args({1, 8})->Args({0, 9})->Args({1, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schur_coefficients)->Args({0, 12})->Args({1, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
