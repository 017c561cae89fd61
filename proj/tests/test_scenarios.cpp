#include "doctest.h"

#include "gielab/pde/scenarios.hpp"

using namespace gielab;
using namespace gielab::pde;

// Reduced-size smoke runs; the acceptance suite exercises the full sizes.

TEST_CASE("separability scenarios pass at reduced size") {
    ScenarioOptions opts;
    opts.n = 128;
    opts.steps = 150;
    const ScenarioReport ns = separable_ns_scenario(opts);
    CHECK(ns.pass);
    CHECK(ns.metric("product_max_entropy") <= 1e-8);

    const ScenarioReport nsb = separable_nsb_scenario(opts);
    CHECK(nsb.pass);
    CHECK(nsb.metric("entangled_entropy_drift") <= 1e-6);
}

TEST_CASE("entangling scenario reports a growing entropy") {
    ScenarioOptions opts;
    opts.n = 128;
    const ScenarioReport rep = newton_entangles_scenario(opts);
    CHECK(rep.pass);
    CHECK(rep.metric("final_entropy") >= 1e-3);
    CHECK(rep.metric("strictly_increasing") == 1.0);
    CHECK_FALSE(rep.rows.empty());
}

TEST_CASE("factorization scenario at reduced size") {
    ScenarioOptions opts;
    opts.n = 128;
    opts.steps = 150;
    const ScenarioReport rep = dyson_factorization_scenario(opts);
    CHECK(rep.pass);
    CHECK(rep.metric("l2_error_ns") <= 1e-6);
    CHECK(rep.metric("l2_error_free") <= 1e-10);
}

TEST_CASE("equivariance scenario at reduced size") {
    ScenarioOptions opts;
    opts.n = 128;
    opts.steps = 200;
    const ScenarioReport rep = equivariance_scenario(opts);
    CHECK(rep.pass);
    CHECK(rep.metric("chi2_x1") < rep.metric("chi2_critical_1pct"));
}

TEST_CASE("frozen-phase scenario at reduced size") {
    ScenarioOptions opts;
    opts.n = 256;
    opts.steps = 20;
    opts.dt = 0.05;
    const ScenarioReport rep = si_frozen_phases_scenario(opts);
    CHECK(rep.pass);
    CHECK(rep.metric("newton_max_rel_err") <= 0.01);
    // the mean-field phase differences come out at half the closed-form size
    CHECK(rep.metric("ns_eq37_diff_ratio") == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("scenario registry") {
    CHECK(scenario_names().size() == 6);
    CHECK_THROWS_AS(run_scenario("nope"), validation_error);
    const ScenarioReport rep = run_scenario("newton-entangles", {128, 2e-3, 100, 1.0, 1});
    CHECK(rep.scenario == "newton-entangles");
}
