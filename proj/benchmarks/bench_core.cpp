#include <benchmark/benchmark.h>

#include <random>

#include "modcx/fixtures.hpp"
#include "modcx/growth.hpp"
#include "modcx/homology.hpp"

using namespace modcx;

namespace {

Mat random_matrix(PrimeField f, int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Mat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, rng() % f.modulus());
    return m;
}

void BM_rref(benchmark::State& state) {
    PrimeField f(101);
    int n = static_cast<int>(state.range(0));
    Mat a = random_matrix(f, n, 2 * n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(a));
    }
}
BENCHMARK(BM_rref)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_kernel(benchmark::State& state) {
    PrimeField f(101);
    int n = static_cast<int>(state.range(0));
    Mat a = random_matrix(f, n / 2, n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_basis(a).cols());
    }
}
BENCHMARK(BM_kernel)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_build_algebra(benchmark::State& state) {
    const FixtureInfo& info = FixtureCatalog::entries()[state.range(0)];
    for (auto _ : state) {
        benchmark::DoNotOptimize(ArtinAlgebra::build(info.spec).dim());
    }
    state.SetLabel(info.name);
}
BENCHMARK(BM_build_algebra)->Arg(0)->Arg(7)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_resolution_k(benchmark::State& state) {
    const FixtureInfo& info = FixtureCatalog::entries()[state.range(0)];
    ArtinAlgebra r = FixtureCatalog::load(info.name);
    int steps = static_cast<int>(state.range(1));
    for (auto _ : state) {
        ResolutionEngine eng(r);
        benchmark::DoNotOptimize(eng.betti(eng.residue_field(), steps).size());
    }
    state.SetLabel(info.name + "/steps" + std::to_string(steps));
}
BENCHMARK(BM_resolution_k)
    ->Args({4, 15})  // m2_e2: exact semisimple tail
    ->Args({7, 20})  // ci_x2y2: fully materialized, linear growth
    ->Args({8, 8})   // gor_m3: budgeted honest prefix
    ->Unit(benchmark::kMillisecond);

void BM_ext_table(benchmark::State& state) {
    ArtinAlgebra r = FixtureCatalog::load("ci_x2y2");
    ModuleRep m = ModuleRep::realize(r, random_module(r, 5));
    ModuleRep n = ModuleRep::realize(r, random_module(r, 6));
    int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ResolutionEngine eng(r);
        HomologyEngine hom(eng);
        benchmark::DoNotOptimize(hom.ext(m, n, steps).available());
    }
}
BENCHMARK(BM_ext_table)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_classify(benchmark::State& state) {
    Sequence s{1, 3};
    for (int i = 2; i < 20; ++i) s.push_back(3 * s[i - 1] - s[i - 2]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(s).conclusive());
    }
}
BENCHMARK(BM_classify)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
