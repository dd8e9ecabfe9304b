#include <benchmark/benchmark.h>

#include "rainbow/colouring.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

// Two colours never form a rainbow triangle, so both kernels scan everything.
Colouring two_colour(int n) {
    Colouring col(n, 2);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) col.set(u, v, 1 + (u * 7 + v * 13) % 2);
    return col;
}

void BM_TriangleSerial(benchmark::State& state) {
    const Colouring col = two_colour(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_triangle_serial(col));
}

void BM_TriangleParallel(benchmark::State& state) {
    const Colouring col = two_colour(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_triangle(col));
}

void BM_CountsSerial(benchmark::State& state) {
    const Colouring col = two_colour(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(colour_counts_serial(col));
}

void BM_CountsParallel(benchmark::State& state) {
    const Colouring col = two_colour(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(colour_counts(col));
}

}  // namespace

BENCHMARK(BM_TriangleSerial)->Arg(100)->Arg(300);
BENCHMARK(BM_TriangleParallel)->Arg(100)->Arg(300);
BENCHMARK(BM_CountsSerial)->Arg(1000)->Arg(3000);
BENCHMARK(BM_CountsParallel)->Arg(1000)->Arg(3000);

BENCHMARK_MAIN();
