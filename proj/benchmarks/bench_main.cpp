#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "harmtri/bohl.hpp"
#include "harmtri/geometry.hpp"
#include "harmtri/roots.hpp"
#include "harmtri/trinomial.hpp"

using namespace harmtri;

namespace {

std::vector<Complex> random_coeffs(int degree, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.2, 5.0);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = std::polar(mag(rng), ang(rng));
    if (std::abs(c.back()) < 0.2) c.back() = {1, 0};
    return c;
}

void BM_PolyRoots(benchmark::State& state) {
    const auto coeffs = random_coeffs(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(coeffs));
}

void BM_FindAllRoots(benchmark::State& state) {
    const int nm = static_cast<int>(state.range(0));
    auto h = make_trinomial({1, 0}, {6, 0}, {1, 0}, nm, nm + 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_all_roots(h));
}

void BM_WStarRange(benchmark::State& state) {
    auto h = make_trinomial({1, 0}, {1, 0}, {std::sqrt(2.0), 0}, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(w_star_range(h, 1.0));
}

void BM_CountRootsBelow(benchmark::State& state) {
    auto h = make_trinomial({1, 0}, {-5, 0}, {2, 0}, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(count_roots_below(h, 2.0));
}

void BM_BLocusCurve(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(b_locus_curve(5, 3, {0.5, 0}, 1.0, samples));
}

void BM_SelfIntersections(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(locus_self_intersections(1, 1, {1, 0}, 0.6, samples));
}

BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_FindAllRoots)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_WStarRange);
BENCHMARK(BM_CountRootsBelow);
BENCHMARK(BM_BLocusCurve)->Arg(256)->Arg(2048);
BENCHMARK(BM_SelfIntersections)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
