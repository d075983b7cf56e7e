#include <benchmark/benchmark.h>

#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/families.hpp"

using namespace ramsey;

static void BM_FindEmbedding(benchmark::State& state) {
    auto comb = SymbolicGraph::comb(ToothFn({}, ArithmeticTail{1, 1}));
    auto pattern = truncate(comb, static_cast<int>(state.range(0)));
    auto host = truncate(comb, static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_embedding(pattern, host));
}
BENCHMARK(BM_FindEmbedding)->Arg(3)->Arg(5)->Arg(7);

static void BM_ArrowsComplete(benchmark::State& state) {
    auto f = complete(static_cast<int>(state.range(0)));
    auto k3 = complete(3);
    for (auto _ : state) benchmark::DoNotOptimize(arrows(f, k3, k3).arrows);
}
BENCHMARK(BM_ArrowsComplete)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
    auto g = truncate(SymbolicGraph::comb(ToothFn({}, ArithmeticTail{1, 1})),
                      static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(6);

static void BM_EnumerateGraphs(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_nonisomorphic_graphs(10, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateGraphs)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateMinimal(benchmark::State& state) {
    auto p3 = path(3);
    auto two_k2 = matching(2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal(p3, two_k2, 6, 4));
}
BENCHMARK(BM_EnumerateMinimal)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
