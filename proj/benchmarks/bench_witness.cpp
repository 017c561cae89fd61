#include <benchmark/benchmark.h>

#include "gielab/entropy.hpp"
#include "gielab/phase_evolution.hpp"
#include "gielab/witness.hpp"

using namespace gielab;

namespace {

const ExperimentGeometry kGeom{450e-6, 250e-6, 1e-14, 1e-14};
const PhysicalConstants kConsts{};

} // namespace

static void BM_ClosedFormWitnesses(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(witness_closed_newton(kGeom, kConsts, t));
        benchmark::DoNotOptimize(witness_closed_ns(kGeom, kConsts, t));
        benchmark::DoNotOptimize(witness_closed_nsb(kGeom, kConsts, t));
    }
}
BENCHMARK(BM_ClosedFormWitnesses);

static void BM_OperatorWitness(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        const TwoQubitPureState s = state_at(NewtonModel{}, kGeom, kConsts, t);
        benchmark::DoNotOptimize(witness_pure(s));
    }
}
BENCHMARK(BM_OperatorWitness);

static void BM_MixtureWitness(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(witness_mixed(nsb_mixture(kGeom, kConsts, t)));
    }
}
BENCHMARK(BM_MixtureWitness);

static void BM_EntanglementEntropy(benchmark::State& state) {
    const TwoQubitPureState s = state_at(NewtonModel{}, kGeom, kConsts, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(entanglement_entropy(s));
}
BENCHMARK(BM_EntanglementEntropy);

static void BM_PptMinEigenvalue(benchmark::State& state) {
    const TwoQubitMixedState mix = nsb_mixture(kGeom, kConsts, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(ppt_min_eigenvalue(mix));
}
BENCHMARK(BM_PptMinEigenvalue);

BENCHMARK_MAIN();
