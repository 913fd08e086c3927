#include "nwvoa/frame.hpp"
#include "nwvoa/hvir.hpp"
#include "nwvoa/nw.hpp"
#include "nwvoa/screening.hpp"
#include "nwvoa/series.hpp"

#include <benchmark/benchmark.h>

using namespace nwvoa;

static void BM_mode_apply_embedding(benchmark::State& state) {
    Frame f = nw_frame();
    auto r = nw::inverse_qhr_map(f);
    FockState t = FockState::exponential(f, nw_vectors(f).c).prepend(nw_vectors(f).alpha, -1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mode_apply(r.image(nw::Gen::F), Rational(-1), t));
    }
}
BENCHMARK(BM_mode_apply_embedding);

static void BM_bracket_modes(benchmark::State& state) {
    Frame f = nw_frame();
    auto r = nw::inverse_qhr_map(f);
    FockState vac = FockState::vacuum(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bracket_modes(r.image(nw::Gen::E), 1, r.image(nw::Gen::F), -1, vac));
    }
}
BENCHMARK(BM_bracket_modes);

static void BM_kernel_cell(benchmark::State& state) {
    long h = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(screening::kernel_profile(h, 1));
    }
}
BENCHMARK(BM_kernel_cell)->Arg(1)->Arg(2)->Arg(3);

static void BM_singular_space(benchmark::State& state) {
    long d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hvir::singular_space(Rational(-2), Rational(0), d));
    }
}
BENCHMARK(BM_singular_space)->Arg(3)->Arg(4)->Arg(5);

static void BM_pbw_character(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nw::pbw_character(state.range(0)));
    }
}
BENCHMARK(BM_pbw_character)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
