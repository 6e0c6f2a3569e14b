#include <benchmark/benchmark.h>

#include "hurwitz_atlas/algebra_a.hpp"
#include "hurwitz_atlas/bracket.hpp"
#include "hurwitz_atlas/class_algebra.hpp"
#include "hurwitz_atlas/power_series.hpp"

using namespace hurwitz_atlas;

static void SeriesProduct(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const PowerSeries y = gen_y(order);
    const PowerSeries z = gen_z(order);
    for (auto _ : state) {
        PowerSeries prod = y * z;
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(SeriesProduct)->Arg(16)->Arg(32)->Arg(64);

static void CutJoinSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PartitionTable table(n);
    const CutJoinMoves moves = cut_join_moves(table);
    std::vector<Int> f(static_cast<size_t>(table.size()), Int(0));
    f[static_cast<size_t>(table.identity_index())] = 1;
    for (auto _ : state) {
        std::vector<Int> g = f;
        for (int step = 0; step < 2 * n; ++step) g = pull_step(moves, g);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(CutJoinSweep)->Arg(10)->Arg(16)->Arg(20);

static void FSeriesGenus2(benchmark::State& state) {
    const BracketTable table = genus2_bracket_table();
    for (auto _ : state) {
        PowerSeries s = f_series(table, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(FSeriesGenus2)->Arg(8)->Arg(12);

static void FitWindow(benchmark::State& state) {
    const int window = static_cast<int>(state.range(0));
    const PowerSeries z2 = to_series(from_yz_poly({{{0, 2}, Rat(1)}}), 2 * window + 8);
    for (auto _ : state) {
        FitResult r = fit(z2, window, 8);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(FitWindow)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
