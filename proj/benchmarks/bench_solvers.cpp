#include <oddsub/families.hpp>
#include <oddsub/parity.hpp>
#include <oddsub/solvers.hpp>
#include <oddsub/tree_eps.hpp>

#include <benchmark/benchmark.h>

using namespace oddsub;

namespace {

void fo_heawood_complement(benchmark::State & state)
{
    auto g = scott_counterexample().graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(fo_exact(g).value);
}
BENCHMARK(fo_heawood_complement);

void fo_line_complete(benchmark::State & state)
{
    auto g = line_complete(static_cast<int>(state.range(0)));
    SearchOptions options{default_node_budget(), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(fo_exact(g, options).value);
}
BENCHMARK(fo_line_complete)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void fo_random_dense(benchmark::State & state)
{
    auto corpus = random_corpus(16, 20, 24, 3);
    for (auto _ : state)
        for (auto & g : corpus)
            benchmark::DoNotOptimize(fo_exact(g).value);
}
BENCHMARK(fo_random_dense)->Unit(benchmark::kMillisecond);

void chromatic_line_graphs(benchmark::State & state)
{
    auto g = line_graph(complete(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(chromatic_line_graphs)->Arg(7)->Arg(8);

void gallai_corpus(benchmark::State & state)
{
    auto corpus = random_corpus(500, 1, 20, 9);
    for (auto _ : state)
        for (auto & g : corpus) {
            benchmark::DoNotOptimize(gallai_even_even(g).s);
            benchmark::DoNotOptimize(gallai_even_odd(g).s);
        }
}
BENCHMARK(gallai_corpus)->Unit(benchmark::kMillisecond);

void tree_dp(benchmark::State & state)
{
    auto t = random_tree(static_cast<int>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(eps_tree_exact(t).value);
}
BENCHMARK(tree_dp)->Arg(16)->Arg(40)->Arg(64);

void p3_cubic(benchmark::State & state)
{
    auto g = random_cubic(16, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(p3_packing_max(g).value);
}
BENCHMARK(p3_cubic)->Unit(benchmark::kMillisecond);

}
BENCHMARK_MAIN();
