#include <benchmark/benchmark.h>

#include <array>

#include "euler_orient/exact_count.hpp"
#include "euler_orient/generators.hpp"
#include "euler_orient/montecarlo.hpp"
#include "euler_orient/spectral.hpp"

namespace {

void BM_BareissDetQhat(benchmark::State& state) {
    const eo::Graph g = eo::random_even_graph(static_cast<int>(state.range(0)), 40, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eo::det_qhat_exact(g));
}
BENCHMARK(BM_BareissDetQhat)->Arg(10)->Arg(30)->Arg(60)->Arg(100);

void BM_Eigenvalues(benchmark::State& state) {
    const eo::Graph g = eo::random_even_graph(static_cast<int>(state.range(0)), 40, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eo::spectral_summary(g));
}
BENCHMARK(BM_Eigenvalues)->Arg(30)->Arg(100)->Arg(300);

void BM_CountDp(benchmark::State& state) {
    const eo::Graph g = eo::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eo::eo_count_dp(g));
}
BENCHMARK(BM_CountDp)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void BM_CountBacktrack(benchmark::State& state) {
    const eo::Graph g = eo::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eo::eo_count_backtrack(g));
}
BENCHMARK(BM_CountBacktrack)->Arg(5)->Arg(7)->Arg(9);

void BM_CountCirculant(benchmark::State& state) {
    const eo::Graph g = eo::circulant(static_cast<int>(state.range(0)), std::array{1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(eo::eo_count_dp(g, 40));
}
BENCHMARK(BM_CountCirculant)->Arg(9)->Arg(15)->Arg(21);

void BM_McUniform(benchmark::State& state) {
    const eo::Graph g = eo::complete(7);
    for (auto _ : state) benchmark::DoNotOptimize(eo::mc_S_uniform(g, {static_cast<std::uint64_t>(state.range(0)), 1, 1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McUniform)->Arg(100000);

void BM_McGaussian(benchmark::State& state) {
    const eo::Graph g = eo::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eo::mc_Int_gaussian(g, {100000, 1, 1}));
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_McGaussian)->Arg(7)->Arg(21)->Arg(51);

}  // namespace
BENCHMARK_MAIN();
