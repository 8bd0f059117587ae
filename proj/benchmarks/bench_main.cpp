#include <benchmark/benchmark.h>

#include "morin/parse.hpp"
#include "morin/schur.hpp"
#include "morin/thom.hpp"

using namespace morin;

static void BM_F_ir(benchmark::State& state)
{
    const int i = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(F_ir(i, r));
}
BENCHMARK(BM_F_ir)->Args({4, 1})->Args({3, 2})->Args({4, 2})->Args({5, 1})->Unit(benchmark::kMicrosecond);

static void BM_SolveThom(benchmark::State& state)
{
    const int i = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_thom(i, r));
}
BENCHMARK(BM_SolveThom)->Args({3, 1})->Args({4, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_SchurJacobiTrudi(benchmark::State& state)
{
    const DiffArg arg = parse_diffarg("x1 + x2 + x3 - b1 - [2*x1]");
    const Partition p = rectangle(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(schur(p, arg));
}
BENCHMARK(BM_SchurJacobiTrudi)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_DeterminantBareiss(benchmark::State& state)
{
    const DiffArg arg = parse_diffarg("x1 + x2 - b1 - b2");
    const auto series = complete_series(arg, 16);
    const int n = static_cast<int>(state.range(0));
    const auto m = jacobi_trudi_matrix(rectangle(n, 2), series);
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant_bareiss(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

static void BM_PolyMul(benchmark::State& state)
{
    const Poly a = parse_poly("(x1 + x2 + x3 - b1 + 2)^" + std::to_string(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
