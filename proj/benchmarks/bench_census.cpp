#include "domcensus/board.hpp"
#include "domcensus/census.hpp"
#include "domcensus/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace domcensus;

namespace {

void BM_rect_general(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    general_bars(n);  // warm the bar cache; the power steps are the workload
    for (auto _ : state) benchmark::DoNotOptimize(rect_general(n, n));
}
BENCHMARK(BM_rect_general)->DenseRange(4, 8);

void BM_rect_maximal(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    maximal_bars(n);
    for (auto _ : state) benchmark::DoNotOptimize(rect_maximal(n, n));
}
BENCHMARK(BM_rect_maximal)->DenseRange(3, 6);

void BM_right_end_table(benchmark::State& state) {
    right_end_bars(8);
    for (auto _ : state) {
        BigInt last;
        right_end_table(8, 8, [&](int, int, const BigInt& count) { last = count; });
        benchmark::DoNotOptimize(last);
    }
}
BENCHMARK(BM_right_end_table);

void BM_board_poly_broken(benchmark::State& state) {
    Board board = parse_board(
        "......#.\n"
        "##..###.\n"
        ".#......\n"
        ".#..##..\n"
        ".#.#..#.\n"
        ".#.#..#.\n"
        ".###..##\n"
        ".#......");
    general_bars(8);
    for (auto _ : state) benchmark::DoNotOptimize(board_poly(board));
}
BENCHMARK(BM_board_poly_broken);

void BM_brute_poly(benchmark::State& state) {
    Board board(4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_poly(board, CensusKind::All));
}
BENCHMARK(BM_brute_poly);

void BM_poly_mul(benchmark::State& state) {
    BivariatePoly a = rect_general(6, 6);
    BivariatePoly b = rect_general(6, 6).swap_vars();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul);

}  // namespace

BENCHMARK_MAIN();
