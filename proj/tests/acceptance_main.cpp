// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gielab/entropy.hpp"
#include "gielab/pde/scenarios.hpp"
#include "gielab/phase_evolution.hpp"
#include "gielab/witness.hpp"

using namespace gielab;

namespace {

const ExperimentGeometry kTabletop{450e-6, 250e-6, 1e-14, 1e-14};
const PhysicalConstants kCodata{};

// Recomputed oracle values (40-digit arithmetic, CODATA G and hbar) at t = 1 s.
constexpr double kWNewton1s = -0.11196791847434267;
constexpr double kWNs1s = 0.05022221855295048;
constexpr double kWNsb1s = 0.016603883875139556;

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, const char* what, std::string& detail) {
    if (!ok) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    return ok;
}

// 1. zero-time baseline
bool criterion1(std::string& detail) {
    bool ok = true;
    ok &= check(std::abs(witness_closed_newton(kTabletop, kCodata, 0.0)) <= 1e-12,
                "W_N(0) != 0", detail);
    ok &= check(std::abs(witness_closed_ns(kTabletop, kCodata, 0.0)) <= 1e-12, "W_NS(0) != 0",
                detail);
    ok &= check(std::abs(witness_closed_nsb(kTabletop, kCodata, 0.0)) <= 1e-12,
                "W_NSB(0) != 0", detail);
    return ok;
}

// 2. qualitative witness curves over [0, 4] s at 2000 samples
bool criterion2(std::string& detail) {
    double min_wn = 1.0;
    double min_wns = 1.0, min_wnsb = 1.0;
    for (int i = 0; i < 2000; ++i) {
        const double t = 4.0 * i / 1999.0;
        if (t > 0.0 && t <= 2.0)
            min_wn = std::min(min_wn, witness_closed_newton(kTabletop, kCodata, t));
        min_wns = std::min(min_wns, witness_closed_ns(kTabletop, kCodata, t));
        min_wnsb = std::min(min_wnsb, witness_closed_nsb(kTabletop, kCodata, t));
    }
    bool ok = true;
    ok &= check(min_wn < -0.05, "W_N never dips below -0.05 in (0,2]", detail);
    ok &= check(min_wns >= -1e-12, "W_NS went negative", detail);
    ok &= check(min_wnsb >= -1e-12, "W_NSB went negative", detail);
    return ok;
}

// 3. spot values at t = 1 s against the recomputed closed-form oracle
bool criterion3(std::string& detail) {
    const double wn = witness_closed_newton(kTabletop, kCodata, 1.0);
    const double wns = witness_closed_ns(kTabletop, kCodata, 1.0);
    const double wnsb = witness_closed_nsb(kTabletop, kCodata, 1.0);
    bool ok = true;
    ok &= check(std::abs(wn - kWNewton1s) <= 1e-9, "W_N(1s) off the recomputed oracle",
                detail);
    ok &= check(std::abs(wns - kWNs1s) <= 1e-9, "W_NS(1s) off the recomputed oracle", detail);
    ok &= check(std::abs(wnsb - kWNsb1s) <= 1e-9, "W_NSB(1s) off the recomputed oracle",
                detail);
    ok &= check(std::abs(witness_pure(state_at(NewtonModel{}, kTabletop, kCodata, 1.0)) - wn) <=
                    1e-10,
                "operator path off W_N", detail);
    ok &= check(std::abs(witness_pure(state_at(NsModel{}, kTabletop, kCodata, 1.0)) - wns) <=
                    1e-10,
                "operator path off W_NS", detail);
    ok &= check(std::abs(witness_mixed(nsb_mixture(kTabletop, kCodata, 1.0)) - wnsb) <= 1e-10,
                "operator path off W_NSB", detail);
    return ok;
}

// 4. cross-path agreement on 1e3 sampled times
bool criterion4(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = 4.0 * i / 999.0;
        worst = std::max(worst,
                         std::abs(witness_pure(state_at(NewtonModel{}, kTabletop, kCodata, t)) -
                                  witness_closed_newton(kTabletop, kCodata, t)));
        worst = std::max(worst,
                         std::abs(witness_pure(state_at(NsModel{}, kTabletop, kCodata, t)) -
                                  witness_closed_ns(kTabletop, kCodata, t)));
        worst = std::max(worst, std::abs(witness_mixed(nsb_mixture(kTabletop, kCodata, t)) -
                                         witness_closed_nsb(kTabletop, kCodata, t)));
    }
    detail = "max |operator - closed| = " + std::to_string(worst);
    return worst <= 1e-10;
}

// 5. separability theorem at the qubit tier
bool criterion5(std::string& detail) {
    bool ok = true;
    double max_sep_entropy = 0.0;
    const BranchPhaseFamily family = BranchPhaseFamily::nsb(kTabletop, kCodata);
    for (int i = 0; i < 1000; ++i) {
        const double t = 4.0 * i / 999.0;
        max_sep_entropy = std::max(
            max_sep_entropy, entanglement_entropy(state_at(NsModel{}, kTabletop, kCodata, t)));
        for (Branch m : branches)
            for (Branch n : branches)
                max_sep_entropy = std::max(
                    max_sep_entropy,
                    entanglement_entropy(state_at(NsbModel{m, n}, kTabletop, kCodata, t)));
        for (const TwoQubitPureState& s : dg_branch_states(family, t))
            max_sep_entropy = std::max(max_sep_entropy, entanglement_entropy(s));
    }
    ok &= check(max_sep_entropy <= 1e-12, "a separable state acquired entropy", detail);

    // Newton states entangled away from the phase roots (none in (0, 2]).
    for (int i = 1; i <= 100; ++i) {
        const double t = 2.0 * i / 100.0;
        if (entanglement_entropy(state_at(NewtonModel{}, kTabletop, kCodata, t)) <= 0.0)
            ok = check(false, "Newton state unentangled at a sampled t", detail);
    }

    const double diag = entanglement_entropy(dg_diagonal_state(family, 1.0).state);
    ok &= check(diag > 1e-3, "diagonal-phase state not entangled", detail);
    return ok;
}

// 6. the branch mixture is PPT at all sampled times
bool criterion6(std::string& detail) {
    double min_eig = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double t = 4.0 * i / 100.0;
        min_eig = std::min(min_eig, ppt_min_eigenvalue(nsb_mixture(kTabletop, kCodata, t)));
    }
    detail = "min PT eigenvalue = " + std::to_string(min_eig);
    return min_eig >= -1e-12;
}

// 7. separability theorem at the PDE tier
bool criterion7(std::string& detail) {
    const pde::ScenarioReport ns = pde::separable_ns_scenario({});
    const pde::ScenarioReport nsb = pde::separable_nsb_scenario({});
    const pde::ScenarioReport newton = pde::newton_entangles_scenario({});
    bool ok = true;
    ok &= check(ns.pass, "separable-ns scenario failed", detail);
    ok &= check(nsb.pass, "separable-nsb scenario failed", detail);
    ok &= check(newton.pass, "newton-entangles scenario failed", detail);
    detail += " [ns max S=" + std::to_string(ns.metric("product_max_entropy")) +
              ", newton final S=" + std::to_string(newton.metric("final_entropy")) + "]";
    return ok;
}

// 8. Dyson factorization
bool criterion8(std::string& detail) {
    const pde::ScenarioReport rep = pde::dyson_factorization_scenario({});
    detail = "l2_ns=" + std::to_string(rep.metric("l2_error_ns")) +
             ", l2_nsb=" + std::to_string(rep.metric("l2_error_nsb")) +
             ", l2_free=" + std::to_string(rep.metric("l2_error_free"));
    return rep.pass;
}

// 9. numerical hygiene: norm conservation, RK4 order, free spreading, velocity
bool criterion9(std::string& detail) {
    using namespace gielab::pde;
    bool ok = true;

    // free Gaussian: norm + width law
    const Grid1D grid = Grid1D::make(256, 8.0);
    const double sigma0 = 0.7;
    const Wavefunction2D wf0 = gaussian_product(grid, 0.0, 0.0, sigma0, sigma0);
    OracleParams p;
    p.model = NsModel{};
    p.g = 0.0;
    p.dt = 2e-3;
    p.steps = 500;
    p.sample_every = 50;
    const EvolveResult free_run = evolve(wf0, p);
    ok &= check(free_run.max_norm_error <= 1e-8, "norm drifted beyond 1e-8", detail);

    const double T = p.dt * p.steps;
    const double expected_var = sigma0 * sigma0 + std::pow(T / (2.0 * sigma0), 2);
    const Eigen::VectorXd rho = free_run.final_wf.marginal1();
    double mean = 0.0;
    for (int j = 0; j < grid.n; ++j) mean += grid.x(j) * rho(j) * grid.dx;
    double var = 0.0;
    for (int j = 0; j < grid.n; ++j)
        var += (grid.x(j) - mean) * (grid.x(j) - mean) * rho(j) * grid.dx;
    ok &= check(std::abs(var - expected_var) / expected_var <= 0.01,
                "free spreading off the width law", detail);

    // RK4 order via halving on a smooth field
    const VelocityFn field = [](const BohmianConfig& c) {
        return Velocity{std::sin(c.X2) + 0.5 * std::cos(c.X1),
                        std::cos(c.X1) - 0.3 * std::sin(0.7 * c.X2)};
    };
    const auto integrate = [&](int steps) {
        BohmianConfig c{0.2, -0.1};
        for (int s = 0; s < steps; ++s) c = step_bohmian(c, field, 2.0 / steps, grid);
        return c;
    };
    const BohmianConfig ref = integrate(4096);
    const auto err = [&](const BohmianConfig& c) {
        return std::hypot(c.X1 - ref.X1, c.X2 - ref.X2);
    };
    const double ratio = err(integrate(16)) / err(integrate(32));
    ok &= check(ratio > 10.0 && ratio < 24.0, "RK4 halving ratio off order 4", detail);

    // spectral vs finite-difference guidance velocity
    const Grid1D fine = Grid1D::make(512, 8.0);
    Wavefunction2D smooth = gaussian_product(fine, 0.0, 0.0, 1.0, 1.0);
    const double kf = 2.0 * M_PI / fine.length();
    for (int a = 0; a < fine.n; ++a)
        for (int b = 0; b < fine.n; ++b)
            smooth.amps(a, b) *= std::exp(std::complex<double>(
                0.0, 0.4 * std::sin(kf * fine.x(a)) + 0.25 * std::cos(kf * fine.x(b))));
    const VelocityField vf(smooth, 1.0, 1.0, 1.0);
    double max_v = 0.0, max_err = 0.0;
    for (int a = 8; a < fine.n - 8; a += 13)
        for (int b = 8; b < fine.n - 8; b += 13) {
            if (smooth.density(a, b) < 1e-8) continue;
            const auto [v1, v2] = vf({fine.x(a), fine.x(b)});
            const double fd1 =
                std::arg(smooth.amps(a + 1, b) / smooth.amps(a - 1, b)) / (2.0 * fine.dx);
            const double fd2 =
                std::arg(smooth.amps(a, b + 1) / smooth.amps(a, b - 1)) / (2.0 * fine.dx);
            max_v = std::max({max_v, std::abs(v1), std::abs(v2)});
            max_err = std::max({max_err, std::abs(v1 - fd1), std::abs(v2 - fd2)});
        }
    ok &= check(max_err / max_v <= 1e-4, "velocity spectral/FD mismatch", detail);

    detail += " [rk4 ratio=" + std::to_string(ratio) +
              ", vel err=" + std::to_string(max_err / max_v) + "]";
    return ok;
}

// 10. SI-frozen phase check ties the PDE tier to the phase-model tier
bool criterion10(std::string& detail) {
    const pde::ScenarioReport rep = pde::si_frozen_phases_scenario({});
    detail = "newton err=" + std::to_string(rep.metric("newton_max_rel_err")) +
             ", nsb err=" + std::to_string(rep.metric("nsb_max_rel_err")) +
             ", eq37 ratio=" + std::to_string(rep.metric("ns_eq37_diff_ratio"));
    return rep.pass;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "zero-time baseline W(0) = 0 for all three models", criterion1},
        {2, "witness curves: W_N < -0.05 in (0,2]; W_NS, W_NSB >= 0 on [0,4]", criterion2},
        {3, "spot values at t = 1 s vs recomputed oracle and operator path", criterion3},
        {4, "operator/closed-form agreement at 1e3 sampled times", criterion4},
        {5, "qubit-tier separability: products stay products, diagonal state entangled",
         criterion5},
        {6, "branch mixture is PPT at 100 sampled times", criterion6},
        {7, "PDE-tier separability and entanglement generation", criterion7},
        {8, "Dyson factorization of separable-model propagation", criterion8},
        {9, "numerical hygiene: norm, RK4 order, width law, velocity agreement", criterion9},
        {10, "SI-frozen grid phases match the phase-model tables", criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
