#include "doctest.h"

#include "gielab/pde/evolve.hpp"

using namespace gielab;
using namespace gielab::pde;

namespace {

const Grid1D kGrid = Grid1D::make(256, 8.0);

OracleParams desk_params(PotentialModel model, double g) {
    OracleParams p;
    p.model = std::move(model);
    p.g = g;
    p.dt = 2e-3;
    p.steps = 300;
    p.sample_every = 25;
    return p;
}

} // namespace

TEST_CASE("frozen-field factor propagation reproduces the mean-field run") {
    const Wavefunction2D wf0 = gaussian_product(kGrid, -1.5, 1.5, 0.7, 0.7);
    const SeparableRunRecord run =
        run_separable_reference(wf0, desk_params(NsModel{}, 1.0));
    const DysonReport report = dyson_factorization_check(run);
    CHECK(report.l2_error <= 1e-6);
    CHECK(report.max_entropy <= 1e-8);
}

TEST_CASE("frozen-field factor propagation reproduces the point-source run") {
    const Wavefunction2D wf0 = gaussian_product(kGrid, -1.5, 1.5, 0.7, 0.7);
    const SeparableRunRecord run = run_separable_reference(
        wf0, desk_params(NsbModel{}, 1.0), born_sample(wf0, 31));
    const DysonReport report = dyson_factorization_check(run);
    CHECK(report.l2_error <= 1e-6);
    CHECK(report.max_entropy <= 1e-8);
}

TEST_CASE("kinetic-only factorization is exact to rounding") {
    const Wavefunction2D wf0 = gaussian_product(kGrid, -1.5, 1.5, 0.7, 0.7);
    const SeparableRunRecord run =
        run_separable_reference(wf0, desk_params(NsModel{}, 0.0));
    const DysonReport report = dyson_factorization_check(run);
    CHECK(report.l2_error <= 1e-10);
}

TEST_CASE("a pair-coupled reference run is rejected") {
    const Wavefunction2D wf0 = gaussian_product(kGrid, -1.5, 1.5, 0.7, 0.7);
    CHECK_THROWS_AS(run_separable_reference(wf0, desk_params(NewtonModel{}, 1.0)),
                    usage_error);

    SeparableRunRecord forged;
    forged.initial = wf0;
    forged.final_wf = wf0;
    forged.params = desk_params(NewtonModel{}, 1.0);
    CHECK_THROWS_AS(dyson_factorization_check(forged), usage_error);
}
