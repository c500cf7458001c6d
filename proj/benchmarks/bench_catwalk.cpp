#include <benchmark/benchmark.h>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/dyck.hpp"
#include "catwalk/triangulation.hpp"
#include "catwalk/walker.hpp"

using namespace catwalk;

namespace {

const BcTable& shared_table() {
    static const BcTable table(2000);
    return table;
}

void BM_build_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BcTable table(n);
        benchmark::DoNotOptimize(table.at(n, 0));
    }
}
BENCHMARK(BM_build_table)->Arg(100)->Arg(500)->Arg(1000)->Arg(2000);

void BM_uniform_draw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BcTable& table = shared_table();
    SeededBitSource source(12345);
    for (auto _ : state)
        benchmark::DoNotOptimize(uniform_below(table.at(n, 0), source));
}
BENCHMARK(BM_uniform_draw)->Arg(100)->Arg(1000)->Arg(2000);

void BM_unrank_path(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BcTable& table = shared_table();
    SeededBitSource source(7);
    const Natural code = uniform_below(table.at(n, 0), source);
    for (auto _ : state)
        benchmark::DoNotOptimize(unrank(table, {n, 0}, code));
}
BENCHMARK(BM_unrank_path)->Arg(100)->Arg(500)->Arg(1000)->Arg(2000);

void BM_sample_dyck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BcTable& table = shared_table();
    SeededBitSource source(99);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_dyck(n, table, source));
}
BENCHMARK(BM_sample_dyck)->Arg(100)->Arg(1000)->Arg(2000);

void BM_sample_triangulation(benchmark::State& state) {
    const int n_vertices = static_cast<int>(state.range(0));
    const BcTable& table = shared_table();
    SeededBitSource source(99);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_triangulation(n_vertices, 0, table, source));
}
BENCHMARK(BM_sample_triangulation)->Arg(100)->Arg(1000)->Arg(2000);

void BM_rank_triangulation(benchmark::State& state) {
    const int n_vertices = static_cast<int>(state.range(0));
    const BcTable& table = shared_table();
    SeededBitSource source(3);
    const Triangulation tri = sample_triangulation(n_vertices, 0, table, source);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_triangulation(n_vertices, 0, tri, table));
}
BENCHMARK(BM_rank_triangulation)->Arg(100)->Arg(1000)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
