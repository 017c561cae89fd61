#include <benchmark/benchmark.h>

#include "gielab/pde/evolve.hpp"

using namespace gielab;
using namespace gielab::pde;

namespace {

OracleParams params_for(PotentialModel model, long steps) {
    OracleParams p;
    p.model = std::move(model);
    p.g = 1.0;
    p.dt = 2e-3;
    p.steps = steps;
    p.sample_every = steps; // diagnostics excluded from the stepping cost
    return p;
}

} // namespace

static void BM_StrangStepNewton(benchmark::State& state) {
    const Grid1D grid = Grid1D::make(static_cast<int>(state.range(0)), 8.0);
    const Wavefunction2D wf0 = gaussian_product(grid, -1.5, 1.5, 0.7, 0.7);
    Evolver evolver(wf0, params_for(NewtonModel{}, 1'000'000));
    for (auto _ : state) evolver.step();
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StrangStepNewton)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_StrangStepMeanField(benchmark::State& state) {
    const Grid1D grid = Grid1D::make(static_cast<int>(state.range(0)), 8.0);
    const Wavefunction2D wf0 = gaussian_product(grid, -1.5, 1.5, 0.7, 0.7);
    Evolver evolver(wf0, params_for(NsModel{}, 1'000'000));
    for (auto _ : state) evolver.step();
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StrangStepMeanField)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_SchmidtEntropy(benchmark::State& state) {
    const Grid1D grid = Grid1D::make(static_cast<int>(state.range(0)), 8.0);
    const Wavefunction2D wf = two_peak_entangled(grid, -2.0, -2.0, 2.0, 2.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(schmidt_entropy(wf));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SchmidtEntropy)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_GuidanceField(benchmark::State& state) {
    const Grid1D grid = Grid1D::make(static_cast<int>(state.range(0)), 8.0);
    const Wavefunction2D wf = gaussian_product(grid, -1.5, 1.5, 0.7, 0.7);
    for (auto _ : state) {
        const VelocityField field(wf, 1.0, 1.0, 1.0);
        benchmark::DoNotOptimize(field({-1.5, 1.5}));
    }
}
BENCHMARK(BM_GuidanceField)->Arg(128)->Arg(256);

static void BM_BornSampling(benchmark::State& state) {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Wavefunction2D wf = gaussian_product(grid, 0.0, 0.0, 0.7, 0.7);
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(born_samples(wf, seed++, 100));
}
BENCHMARK(BM_BornSampling);

BENCHMARK_MAIN();
