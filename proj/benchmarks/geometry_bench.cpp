#include "geoplan/cube.hpp"
#include "geoplan/klein.hpp"
#include "geoplan/strat.hpp"
#include "geoplan/torus.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace geoplan;

namespace {

Rational unit(std::mt19937_64& rng, long den) {
    return make_rational(static_cast<long>(rng() % static_cast<unsigned long>(den)), den);
}

} // namespace

static void BM_TorusGeodesics(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    Vec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = unit(rng, 97);
        b[i] = a[i] + make_rational(1, 2); // fully antipodal: 2^n geodesics
    }
    const TorusPoint x(a), y(b);
    for (auto _ : state) benchmark::DoNotOptimize(torus_geodesics(x, y));
}
BENCHMARK(BM_TorusGeodesics)->DenseRange(1, 6);

static void BM_TorusPlan(benchmark::State& state) {
    std::mt19937_64 rng(2);
    Vec a(3), b(3);
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = unit(rng, 1000);
        b[i] = unit(rng, 1000);
    }
    const TorusPoint x(a), y(b);
    for (auto _ : state) benchmark::DoNotOptimize(torus_plan(x, y));
}
BENCHMARK(BM_TorusPlan);

static void BM_KleinGeodesics(benchmark::State& state) {
    const KleinPoint x(make_rational(1, 7), make_rational(2, 9));
    const KleinPoint y(make_rational(3, 5), make_rational(5, 11));
    const int window = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(klein_geodesics(x, y, window));
}
BENCHMARK(BM_KleinGeodesics)->Arg(2)->Arg(4)->Arg(8);

static void BM_KleinCutLocus(benchmark::State& state) {
    const KleinPoint x(make_rational(1, 7), state.range(0) ? make_rational(2, 9) : make_rational(0));
    for (auto _ : state) benchmark::DoNotOptimize(klein_cut_locus(x));
}
BENCHMARK(BM_KleinCutLocus)->Arg(0)->Arg(1);

static void BM_CubeGeodesics(benchmark::State& state) {
    const CubePoint x(Face::zm, make_rational(-1, 5), make_rational(-3, 10));
    const CubePoint y(Face::zp, make_rational(1, 4), make_rational(-1, 3));
    const auto max_faces = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cube_geodesics(x, y, max_faces));
}
BENCHMARK(BM_CubeGeodesics)->Arg(4)->Arg(5)->Arg(6);

static void BM_CubeCornerGeodesics(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(corner_geodesics());
}
BENCHMARK(BM_CubeCornerGeodesics);

static void BM_LowerBound(benchmark::State& state) {
    const StratPoset p = builtin_poset("torus_corner:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lower_bound(p));
}
BENCHMARK(BM_LowerBound)->DenseRange(1, 4);

BENCHMARK_MAIN();
