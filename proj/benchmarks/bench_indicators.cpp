#include <benchmark/benchmark.h>

#include <random>

#include "rpqi/analysis.hpp"
#include "rpqi/fronts.hpp"
#include "rpqi/kary.hpp"

using namespace rpqi;

namespace {

PointSet random_set(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point p(m);
        for (double& v : p) v = coord(rng);
        pts.push_back(std::move(p));
    }
    return PointSet(std::move(pts));
}

IndicatorContext default_context() {
    return IndicatorContext::defaults_for(PreferenceSpec::defaults_for({0.5, 0.5}),
                                          sample_front({FrontProblem::Dtlz2, 2}, 1000));
}

void bm_nondominated_filter(benchmark::State& state) {
    const PointSet P = random_set(static_cast<std::size_t>(state.range(0)),
                                  static_cast<std::size_t>(state.range(1)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nondominated_filter(P));
    }
}
BENCHMARK(bm_nondominated_filter)->Args({100, 2})->Args({1000, 2})->Args({10000, 2})->Args({100, 3})->Args({1000, 3});

void bm_hypervolume(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(1));
    const PointSet P = random_set(static_cast<std::size_t>(state.range(0)), m, 2);
    const Point ref(m, 1.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypervolume(P, ref));
    }
}
BENCHMARK(bm_hypervolume)->Args({100, 2})->Args({1000, 2})->Args({100, 3})->Args({500, 3});

void bm_igd(benchmark::State& state) {
    const PointSet P = random_set(static_cast<std::size_t>(state.range(0)), 2, 3);
    const PointSet S = sample_front({FrontProblem::Dtlz2, 2}, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(igd(P, S));
    }
}
BENCHMARK(bm_igd)->Arg(20)->Arg(100)->Arg(500);

void bm_kendall_tau(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = val(rng);
        v[i] = val(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(kendall_tau(u, v));
    }
}
BENCHMARK(bm_kendall_tau)->Arg(100)->Arg(1000)->Arg(10000);

void bm_rank_table(benchmark::State& state) {
    const auto sets = synth_sets({FrontProblem::Dtlz2, 2}, SynthLayout::TwoObjective10);
    const IndicatorContext ctx = default_context();
    const auto sel = all_indicators();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_table(sets, ctx, sel));
    }
}
BENCHMARK(bm_rank_table);

void bm_consistency_line_sweep(benchmark::State& state) {
    const PointSet sample = sample_front({FrontProblem::Dtlz2, 2}, 100);
    const auto grid = line_grid({-3.0, 3.0}, {3.0, -3.0}, 0.01);
    const PreferenceSpec base = PreferenceSpec::defaults_for({0.0, 0.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(consistency_sweep(sample, grid, base));
    }
}
BENCHMARK(bm_consistency_line_sweep);

}  // namespace

BENCHMARK_MAIN();
