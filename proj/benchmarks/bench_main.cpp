#include <benchmark/benchmark.h>

#include <complex>

#include "cyclab/bergman.hpp"
#include "cyclab/corona.hpp"
#include "cyclab/disk_grid.hpp"
#include "cyclab/growth.hpp"
#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"

namespace {

using namespace cyclab;

void BM_InnerCoeffs(benchmark::State& state) {
    const auto nu = AtomicSingularMeasure::point_mass(1.0, 0.0);
    const auto M = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(inner_coeffs(nu, M));
}
BENCHMARK(BM_InnerCoeffs)->Arg(256)->Arg(1024)->Arg(4096);

void BM_Multiply(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const auto nu = AtomicSingularMeasure::point_mass(1.0, 0.0);
    const TaylorSeries u = inner_coeffs(nu, M);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(u, u, M));
}
BENCHMARK(BM_Multiply)->Arg(256)->Arg(1024)->Arg(4096);

void BM_GramDistance(benchmark::State& state) {
    const auto N = static_cast<std::size_t>(state.range(0));
    const WeightSequence w = make_power(1.0);
    const auto nu = AtomicSingularMeasure::point_mass(1.0, 0.0);
    const TaylorSeries u = inner_coeffs(nu, 2048);
    for (auto _ : state) benchmark::DoNotOptimize(gram_distance(w, u, N, 2048));
}
BENCHMARK(BM_GramDistance)->Arg(8)->Arg(32)->Arg(64);

void BM_InfimumCheck(benchmark::State& state) {
    const auto nu = AtomicSingularMeasure::point_mass(1.0, 0.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(infimum_check(nu, n));
}
BENCHMARK(BM_InfimumCheck)->Arg(16)->Arg(256);

void BM_OuterClosedFormSweep(benchmark::State& state) {
    const LambdaMajorant L = lambda_power(1.0);
    const DiskGrid grid = standard_grid(20, 1024, {0.0}, 128);
    const double lam = L(0.1);
    for (auto _ : state) {
        double acc = 0.0;
        for (const GridPoint& p : grid.points) acc += outer_fdelta_log_abs(lam, 0.1, p.z);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_OuterClosedFormSweep);

}  // namespace

BENCHMARK_MAIN();
