#include <benchmark/benchmark.h>

#include <random>

#include "qslice/checks.hpp"
#include "qslice/hankel.hpp"
#include "qslice/kernels.hpp"
#include "qslice/nehari.hpp"

using namespace qslice;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_LinfNorm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto f = checks::random_series(rng, -8, 8);
    for (auto _ : state) benchmark::DoNotOptimize(linf_norm(f, 8192, exec_of(state)));
}
BENCHMARK(BM_LinfNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_BmoNorm(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto f = checks::random_series(rng, -4, 4, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(bmo_norm(f, {}, exec_of(state)));
}
BENCHMARK(BM_BmoNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_JacobiSvd(benchmark::State& state) {
    std::mt19937_64 rng(3);
    QuaternionSequence alpha(255);
    for (auto& q : alpha) q = checks::random_quaternion(rng);
    const auto m = complex_embed(build_hankel_matrix(alpha, 64));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::jacobi_svd(m, exec_of(state)).sigma[0]);
}
BENCHMARK(BM_JacobiSvd)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OptimizeDistance(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto phi = checks::random_symbol(rng);
    OptimizeOptions o;
    o.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(optimize_distance(phi, o).distance);
}
BENCHMARK(BM_OptimizeDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
