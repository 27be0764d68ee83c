// Serial reference vs OpenMP for the curvature grid and batch integration.

#include <benchmark/benchmark.h>

#include "rotgeo/kernels.hpp"

using namespace rotgeo;

namespace {

DoubleRotationSurface grid_surface() {
    const Interval s{0.3, 3}, t{-1, 1};
    return {SurfaceFamily(FamilyKind::hyperbolic14, Variant::A, ProfileFunction::parse("2+0.5*t^2", s),
                          ProfileFunction::parse("3+2*t", s)),
            ProfileFunction::parse("0.1*t", t), ProfileFunction::parse("1+0.7*t+t^2", t)};
}

CurvatureGridSpec grid_spec(std::size_t n) { return {{-1, 1}, {0.3, 3}, n, n, 0.0}; }

SurfaceFamily batch_family() {
    const Interval d{0, 20};
    return SurfaceFamily(FamilyKind::hyperbolic23, Variant::A,
                         ProfileFunction::parse("2+t/sqrt(2)", d),
                         ProfileFunction::parse("1+t/sqrt(2)", d));
}

std::vector<GeodesicState> batch_starts(const SurfaceFamily& fam, std::size_t n) {
    std::vector<GeodesicState> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(state_from_angles(fam, 0, 0, 1 + 0.01 * i, 0.3 + 0.01 * i, 0.1 * i));
    return out;
}

void BM_CurvatureGridSerial(benchmark::State& state) {
    const auto srf = grid_surface();
    const auto spec = grid_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(curvature_grid_serial(srf, spec));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_CurvatureGrid(benchmark::State& state) {
    const auto srf = grid_surface();
    const auto spec = grid_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(curvature_grid(srf, spec));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_BatchSerial(benchmark::State& state) {
    const auto fam = batch_family();
    const auto starts = batch_starts(fam, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_batch_serial(fam, starts, 2.0, 1e-3));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Batch(benchmark::State& state) {
    const auto fam = batch_family();
    const auto starts = batch_starts(fam, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_batch(fam, starts, 2.0, 1e-3));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CurvatureGridSerial)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurvatureGrid)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Batch)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
