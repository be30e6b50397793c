// Parallel vs serial all-pairs derived implications on random graphs.

#include "likelic/inference.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

namespace {

likelic::ContextGraph random_graph(std::size_t n, double density, unsigned seed)
{
    std::mt19937 rng(seed);
    std::bernoulli_distribution has_edge(density);
    std::uniform_int_distribution<int> grade(0, 6);
    likelic::GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex("v" + std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && has_edge(rng))
                b.add_implication({i}, {j}, likelic::Likeliness(grade(rng)));
    return std::move(b).build();
}

void BM_AllPairsParallel(benchmark::State& state)
{
    auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(likelic::all_pairs_derived(g));
    state.SetComplexityN(state.range(0));
}

void BM_AllPairsSerial(benchmark::State& state)
{
    auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(likelic::all_pairs_derived_serial(g));
    state.SetComplexityN(state.range(0));
}

void BM_PerSourceWidest(benchmark::State& state)
{
    auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.05, 7);
    for (auto _ : state)
        for (std::uint32_t s = 0; s < g.vertex_count(); ++s)
            benchmark::DoNotOptimize(likelic::widest_from(g, {s}));
}

} // namespace

BENCHMARK(BM_AllPairsParallel)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_AllPairsSerial)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_PerSourceWidest)->RangeMultiplier(2)->Range(64, 1024);

BENCHMARK_MAIN();
