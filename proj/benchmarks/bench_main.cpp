#include <benchmark/benchmark.h>

#include "exactchroma/chordal.hpp"
#include "exactchroma/exact_coloring.hpp"
#include "exactchroma/generators.hpp"
#include "exactchroma/graph.hpp"
#include "exactchroma/oracle.hpp"

namespace {

using namespace exactchroma;

void BM_mcs_order(benchmark::State& state) {
    Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(mcs_order(g));
}
BENCHMARK(BM_mcs_order)->Arg(64)->Arg(256)->Arg(1024);

void BM_all_pairs_bfs(benchmark::State& state) {
    Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 42);
    for (auto _ : state) {
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            benchmark::DoNotOptimize(bfs_distances(g, u));
    }
}
BENCHMARK(BM_all_pairs_bfs)->Arg(64)->Arg(256);

void BM_exact_color_odd(benchmark::State& state) {
    Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(exact_color(g, 5));
}
BENCHMARK(BM_exact_color_odd)->Arg(32)->Arg(64)->Arg(128);

void BM_exact_color_even(benchmark::State& state) {
    Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(exact_color(g, 4));
}
BENCHMARK(BM_exact_color_even)->Arg(32)->Arg(64)->Arg(128);

void BM_brute_chromatic(benchmark::State& state) {
    Graph g = exact_distance_graph(random_ktree(12, 2, 7), 2);
    for (auto _ : state) benchmark::DoNotOptimize(brute_chromatic_number(g));
}
BENCHMARK(BM_brute_chromatic);

}  // namespace

BENCHMARK_MAIN();
