// Microbenchmarks for the arithmetic kernels. Catalog series (E2, E4, eta, t)
// are memoized, so timings here stick to the unmemoized paths; memoized
// builders are prewarmed outside the timed region where they feed a kernel.
#include <random>

#include <benchmark/benchmark.h>

#include "qsw/frobenius.hpp"
#include "qsw/halfplane.hpp"
#include "qsw/modular_forms.hpp"
#include "qsw/puiseux.hpp"
#include "qsw/schwarz.hpp"

using namespace qsw;

namespace {

PuiseuxSeries dense_series(long order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 9);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(order));
    for (long i = 0; i < order; ++i) c.push_back(rat(num(rng), den(rng)));
    if (is_zero(c[0])) c[0] = 1;
    return PuiseuxSeries::make(1, 0, std::move(c));
}

}  // namespace

static void BM_SeriesMul(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries a = dense_series(order, 1), b = dense_series(order, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128)->Arg(256)->Arg(512)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oNSquared);

static void BM_SeriesDiv(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries n = dense_series(order, 3), d = dense_series(order, 4);
    for (auto _ : state) benchmark::DoNotOptimize(div(n, d));
}
BENCHMARK(BM_SeriesDiv)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_PowRatSqrt(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries m = dense_series(order, 5);
    std::vector<Rat> c = m.coeffs();
    c[0] = 1;
    m = PuiseuxSeries::make(1, 0, std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(pow_rat(m, Rat(1, 2)));
}
BENCHMARK(BM_PowRatSqrt)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_FrobeniusSolve(benchmark::State& state) {
    long order = state.range(0);
    e4(order);  // prewarm the memoized Eisenstein input
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(Rat(1, 5), order));
    state.SetComplexityN(order);
}
BENCHMARK(BM_FrobeniusSolve)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

static void BM_ResonantSolve(benchmark::State& state) {
    long order = state.range(0);
    e4(order);
    for (auto _ : state) benchmark::DoNotOptimize(solve(Rat(1), order));
}
BENCHMARK(BM_ResonantSolve)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_SchwarzianOfHauptmodul(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries t = haupt_t(order);
    for (auto _ : state) benchmark::DoNotOptimize(q_schwarz(t));
}
BENCHMARK(BM_SchwarzianOfHauptmodul)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

static void BM_OdeResidual(benchmark::State& state) {
    long order = state.range(0);
    FrobeniusBasis b = solve(Rat(1, 5), order + 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(ode_residual(b.y1, Rat(1, 5), order));
}
BENCHMARK(BM_OdeResidual)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EvalSeriesAtI(benchmark::State& state) {
    PuiseuxSeries s = e4(80);
    EvalContext ctx;
    BigComplex tau{BigFloat(0.1), BigFloat(1.0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_series(s, tau, ctx));
}
BENCHMARK(BM_EvalSeriesAtI)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
