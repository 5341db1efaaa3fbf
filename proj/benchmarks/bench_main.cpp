#include "hmf/cosets.hpp"
#include "hmf/equidist.hpp"
#include "hmf/kloosterman.hpp"
#include "hmf/measures.hpp"
#include "hmf/tau.hpp"

#include <benchmark/benchmark.h>

using namespace hmf;

static void BM_KloostermanQ(benchmark::State & state)
{
    auto Q = NumberField::rational();
    auto chi = DirichletCharacter::trivial(Q, Ideal::unit(Q));
    KloostermanQuery q{Q.from_integer(state.range(0)), Q.one(), Q.one()};
    for (auto _ : state) benchmark::DoNotOptimize(kloosterman(Q, chi, q));
}
BENCHMARK(BM_KloostermanQ)->Arg(97)->Arg(997)->Arg(9973);

static void BM_KloostermanQuadratic(benchmark::State & state)
{
    auto F = NumberField::real_quadratic(5);
    auto chi = DirichletCharacter::trivial(F, Ideal::unit(F));
    auto r = inverse_different_generator(F);
    KloostermanQuery q{F.make(state.range(0), 1), r, r};
    for (auto _ : state) benchmark::DoNotOptimize(kloosterman(F, chi, q));
    state.SetLabel("N(c) = " + to_string(F.norm(q.c)));
}
BENCHMARK(BM_KloostermanQuadratic)->Arg(7)->Arg(31)->Arg(100);

static void BM_WeilScan(benchmark::State & state)
{
    auto Q = NumberField::rational();
    auto chi = DirichletCharacter::trivial(Q, Ideal::unit(Q));
    WeilScanOptions opt;
    opt.max_norm = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(weil_scan(Q, chi, Q.one(), Q.one(), opt));
}
BENCHMARK(BM_WeilScan)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_TauSeries(benchmark::State & state)
{
    for (auto _ : state) benchmark::DoNotOptimize(ramanujan_tau(state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TauSeries)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_BruteForceConvolution(benchmark::State & state)
{
    auto p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_convolution(p, 1, 1));
}
BENCHMARK(BM_BruteForceConvolution)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PlancherelInterval(benchmark::State & state)
{
    auto pl0 = SpectralMeasure::plancherel(0);
    for (auto _ : state) benchmark::DoNotOptimize(pl0.measure_interval(0.25, 25.25));
}
BENCHMARK(BM_PlancherelInterval);

static void BM_NuPlancherel(benchmark::State & state)
{
    for (auto _ : state) benchmark::DoNotOptimize(npl_consistency(-5.0, 2.0, 1));
}
BENCHMARK(BM_NuPlancherel);

static void BM_SatoTatePolynomial(benchmark::State & state)
{
    SatoTateMeasure mu({7, 0}, 7);
    auto S = s_poly(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mu.polynomial(S));
}
BENCHMARK(BM_SatoTatePolynomial)->Arg(2)->Arg(6)->Arg(12);

static void BM_SynthesizeAndCount(benchmark::State & state)
{
    auto F = NumberField::real_quadratic(73);
    Box box{{0, 0}, {0}, {{1, 0.3, 1.2}}};
    auto J = parse_windows(F, "2:0=0:1,3:0=1:2");
    SynthOptions opt;
    opt.count = state.range(0);
    for (auto _ : state) {
        auto ds = synthesize(F, box, 100.0, {{2, 0}, {3, 0}}, opt);
        benchmark::DoNotOptimize(count(ds, box, 100.0, J));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SynthesizeAndCount)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
