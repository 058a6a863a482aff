#include <benchmark/benchmark.h>

#include "tableaux/brownian.hpp"
#include "tableaux/pmf.hpp"
#include "tableaux/rsk.hpp"
#include "tableaux/schur.hpp"
#include "tableaux/tridiagonal.hpp"
#include "tableaux/word.hpp"

using namespace tableaux;

static void BM_RskShape(benchmark::State& state) {
    AlphabetDistribution dist = build_block_structure(std::vector<double>{0.5, 0.3, 0.2});
    Rng rng(42);
    Word w = sample_word(dist, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rsk_shape(w));
}
BENCHMARK(BM_RskShape)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_LisLength(benchmark::State& state) {
    AlphabetDistribution dist =
        build_block_structure(std::vector<double>(50, 0.02));
    Rng rng(42);
    Word w = sample_word(dist, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(lis_length(w));
}
BENCHMARK(BM_LisLength)->Arg(10000)->Arg(100000);

static void BM_Eigvals(benchmark::State& state) {
    Rng rng(7);
    HermitianMatrix x = sample_gue(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(eigvals(x));
}
BENCHMARK(BM_Eigvals)->Arg(16)->Arg(64)->Arg(200);

static void BM_TridiagEigvals(benchmark::State& state) {
    Rng rng(7);
    TridiagonalModel t =
        sample_tridiagonal_gue(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(ql_eigenvalues(t));
}
BENCHMARK(BM_TridiagEigvals)->Arg(200)->Arg(1000);

static void BM_Lhat(benchmark::State& state) {
    AlphabetDistribution dist = build_block_structure(std::vector<double>{0.25, 0.25, 0.25, 0.25});
    Rng rng(11);
    IncrementGrid g =
        sample_increment_grid(dist, static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(lhat(g, 2));
}
BENCHMARK(BM_Lhat)->Arg(500)->Arg(2000);

static void BM_SchurDet(benchmark::State& state) {
    AlphabetDistribution dist = build_block_structure(std::vector<double>{0.4, 0.4, 0.2});
    Partition lam{{6, 4, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(schur_repeated_det(lam, dist));
}
BENCHMARK(BM_SchurDet);

static void BM_ShapePmf(benchmark::State& state) {
    AlphabetDistribution dist = build_block_structure(std::vector<double>{0.5, 0.3, 0.2});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            shape_pmf(dist, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShapePmf)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
