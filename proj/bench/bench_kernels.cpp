// Microbenchmarks for the two data-parallel kernels, OpenMP vs the serial
// reference implementation.

#include <benchmark/benchmark.h>

#include "flatsurf/checks.hpp"
#include "flatsurf/grid.hpp"

using namespace flatsurf;

namespace {

const TorusParams kTp = TorusParams::from_r1(0.6);

GeneratorConfig fast_cosh_sinh() {
    GeneratorConfig cfg;
    cfg.c = 4.0;
    cfg.family = Family::cosh_sinh;
    return cfg;
}

const GridSpec kGrid{-2.0, 2.0, -2.5, 2.5, 200, 200};

void BM_sample_grid_serial(benchmark::State& state) {
    const GeneratorConfig cfg = fast_cosh_sinh();
    for (auto _ : state) {
        const SampledField f = sample_grid_serial(kTp, cfg, kGrid);
        benchmark::DoNotOptimize(f.records.data());
    }
    state.SetItemsProcessed(state.iterations() * kGrid.vertex_count());
}

void BM_sample_grid_omp(benchmark::State& state) {
    const GeneratorConfig cfg = fast_cosh_sinh();
    const int threads = (int)state.range(0);
    for (auto _ : state) {
        const SampledField f = sample_grid(kTp, cfg, kGrid, kMaskThresholdDefault, threads);
        benchmark::DoNotOptimize(f.records.data());
    }
    state.SetItemsProcessed(state.iterations() * kGrid.vertex_count());
}

// The residual-block kernel, driven by the algebraic identity rows.
ResidualBlockFn algebraic_block(const GeneratorConfig& cfg) {
    return [cfg](ParamPoint u, std::span<double> out) {
        const auto rows = check_algebraic_point(kTp, cfg, u);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].value) out[i] = *rows[i].value;
    };
}

std::vector<ParamPoint> block_points(std::size_t n) {
    Sobol2D seq;
    std::vector<ParamPoint> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(seq.next_in(-2.0, 2.0, -2.5, 2.5));
    return pts;
}

void BM_evaluate_block_serial(benchmark::State& state) {
    const GeneratorConfig cfg = fast_cosh_sinh();
    const auto pts = block_points(2000);
    const ResidualBlockFn fn = algebraic_block(cfg);
    for (auto _ : state) {
        const auto res = evaluate_block_serial(fn, pts, 15);
        benchmark::DoNotOptimize(res.data());
    }
    state.SetItemsProcessed(state.iterations() * (long long)pts.size());
}

void BM_evaluate_block_omp(benchmark::State& state) {
    const GeneratorConfig cfg = fast_cosh_sinh();
    const auto pts = block_points(2000);
    const ResidualBlockFn fn = algebraic_block(cfg);
    const int threads = (int)state.range(0);
    for (auto _ : state) {
        const auto res = evaluate_block(fn, pts, 15, threads);
        benchmark::DoNotOptimize(res.data());
    }
    state.SetItemsProcessed(state.iterations() * (long long)pts.size());
}

}  // namespace

BENCHMARK(BM_sample_grid_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_grid_omp)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evaluate_block_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evaluate_block_omp)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
