#include <benchmark/benchmark.h>

#include <vector>

#include "wfk/entropy_bounds.hpp"
#include "wfk/entropy_empirical.hpp"
#include "wfk/kernel.hpp"
#include "wfk/rkhs.hpp"

namespace {

const wfk::WeierstrassParams kParams = wfk::make_params(0.5, 3);

void bm_eval_weierstrass(benchmark::State& state) {
    const double tol = std::pow(10.0, -state.range(0));
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::eval_weierstrass(kParams, x, tol));
        x += 1e-4;
        if (x > 1.0) x = -1.0;
    }
}
BENCHMARK(bm_eval_weierstrass)->Arg(6)->Arg(10)->Arg(14);

void bm_gram_matrix(benchmark::State& state) {
    std::vector<double> pts(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        pts[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(pts.size());
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::gram_matrix(kParams, pts));
    }
}
BENCHMARK(bm_gram_matrix)->Arg(20)->Arg(50);

void bm_kernel_section_eval(benchmark::State& state) {
    const auto sec = wfk::kernel_section(kParams, 0.37, 12);
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::evaluate(sec, x));
        x += 1e-4;
        if (x > 1.0) x = -1.0;
    }
}
BENCHMARK(bm_kernel_section_eval);

void bm_bound_report(benchmark::State& state) {
    const double eps = std::pow(10.0, -state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::make_bound_report(kParams, eps));
    }
}
BENCHMARK(bm_bound_report)->Arg(2)->Arg(8);

void bm_pairwise_distances(benchmark::State& state) {
    const auto pool =
        wfk::sample_unit_ball(kParams, 6, static_cast<int>(state.range(0)), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::pairwise_sup_distances(pool, 2001));
    }
}
BENCHMARK(bm_pairwise_distances)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void bm_greedy_packing(benchmark::State& state) {
    const auto pool = wfk::sample_unit_ball(kParams, 6, 300, 0);
    const auto dist = wfk::pairwise_sup_distances(pool, 2001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::greedy_packing(dist.lower, 0.2));
    }
}
BENCHMARK(bm_greedy_packing);

void bm_cover_count(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wfk::head_cover(kParams, 2, 0.1));
    }
}
BENCHMARK(bm_cover_count)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
