#include "gielab/phase_evolution.hpp"

#include <cmath>
#include <complex>

#include "gielab/errors.hpp"

namespace gielab {

namespace {

using namespace std::complex_literals;

void check_time(double t) {
    if (!(t >= 0.0)) throw validation_error("phase evolution: t >= 0 violated");
}

/// Product state (f_L|L> + f_R|R>)(g_L|L> + g_R|R>)/2 from per-particle
/// phases; exactly rank-1 by construction.
TwoQubitPureState product_state(const SeparableParts& parts) {
    TwoQubitPureState s;
    for (Branch k : branches) {
        const std::complex<double> f = std::exp(1i * parts.phase1(k)) * 0.5;
        for (Branch l : branches) {
            const std::complex<double> g = std::exp(1i * parts.phase2(l));
            s.amp(k, l) = f * g;
        }
    }
    return s;
}

SeparableParts nsb_parts(const BranchPhaseFamily& family, Branch m, Branch n, double t) {
    SeparableParts parts;
    for (Branch k : branches) {
        parts.particle1[index_of(k)] = family.rate1(k, m, n) * t;
        parts.particle2[index_of(k)] = family.rate2(k, m, n) * t;
    }
    return parts;
}

} // namespace

double gravitational_phase_rate(const ExperimentGeometry& geom,
                                const PhysicalConstants& consts) {
    geom.validate();
    consts.validate();
    return consts.G * geom.m1 * geom.m2 / consts.hbar;
}

PhaseTable newton_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                         double t) {
    check_time(t);
    const double gamma = gravitational_phase_rate(geom, consts);
    const PairSeparations r = pair_separations(geom);
    PhaseTable table;
    for (Branch k : branches)
        for (Branch l : branches)
            table.gamma[index_of(k)][index_of(l)] = gamma * t / r(k, l);
    return table;
}

PhaseTable ns_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                     double t) {
    check_time(t);
    const double gamma = gravitational_phase_rate(geom, consts);
    const double common = gamma * t / geom.d; // half of the overall 2*gamma*t/d
    SeparableParts parts;
    parts.particle1[index_of(Branch::L)] = gamma * t / (geom.d + geom.delta) + common;
    parts.particle1[index_of(Branch::R)] = gamma * t / (geom.d - geom.delta) + common;
    parts.particle2[index_of(Branch::L)] = gamma * t / (geom.d - geom.delta) + common;
    parts.particle2[index_of(Branch::R)] = gamma * t / (geom.d + geom.delta) + common;
    return PhaseTable::from_separable(parts);
}

PhaseTable nsb_branch_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                             Branch m, Branch n, double t) {
    check_time(t);
    const BranchPhaseFamily family = BranchPhaseFamily::nsb(geom, consts);
    return PhaseTable::from_separable(nsb_parts(family, m, n, t));
}

TwoQubitPureState state_from_phases(const PhaseTable& table) {
    if (table.separable_parts) return product_state(*table.separable_parts);
    TwoQubitPureState s;
    for (Branch k : branches)
        for (Branch l : branches)
            s.amp(k, l) = 0.5 * std::exp(1i * table(k, l));
    return s;
}

TwoQubitPureState state_at(const PotentialModel& model, const ExperimentGeometry& geom,
                           const PhysicalConstants& consts, double t) {
    check_time(t);
    struct Visitor {
        const ExperimentGeometry& geom;
        const PhysicalConstants& consts;
        double t;

        TwoQubitPureState operator()(const NewtonModel&) const {
            return state_from_phases(newton_phases(geom, consts, t));
        }
        TwoQubitPureState operator()(const NsModel&) const {
            return state_from_phases(ns_phases(geom, consts, t));
        }
        TwoQubitPureState operator()(const NsbModel& nsb) const {
            return state_from_phases(nsb_branch_phases(geom, consts, nsb.m, nsb.n, t));
        }
        TwoQubitPureState operator()(const SeparableGenericModel& sep) const {
            if (!sep.v1 || !sep.v2)
                throw usage_error("SeparableGenericModel: both potential functions required");
            const BranchCenters centers = branch_centers(geom);
            SeparableParts parts;
            for (Branch k : branches) {
                parts.particle1[index_of(k)] =
                    -sep.v1(centers.particle1(k)) * t / consts.hbar;
                parts.particle2[index_of(k)] =
                    -sep.v2(centers.particle2(k)) * t / consts.hbar;
            }
            return product_state(parts);
        }
        TwoQubitPureState operator()(const DgDiagonalModel& dg) const {
            return dg_diagonal_state(dg.family, t).state;
        }
    };
    return std::visit(Visitor{geom, consts, t}, model);
}

TwoQubitMixedState nsb_mixture(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                               double t) {
    check_time(t);
    TwoQubitMixedState mix;
    for (Branch m : branches) {
        for (Branch n : branches) {
            const TwoQubitPureState psi =
                state_from_phases(nsb_branch_phases(geom, consts, m, n, t));
            mix.rho += 0.25 * (psi.amps * psi.amps.adjoint());
        }
    }
    return mix;
}

std::array<TwoQubitPureState, 4> dg_branch_states(const BranchPhaseFamily& family, double t) {
    check_time(t);
    if (!family.rate1 || !family.rate2)
        throw usage_error("BranchPhaseFamily: both rate functions required");
    std::array<TwoQubitPureState, 4> states;
    for (Branch m : branches)
        for (Branch n : branches)
            states[pair_index(m, n)] = product_state(nsb_parts(family, m, n, t));
    return states;
}

DiagonalPhaseState dg_diagonal_state(const BranchPhaseFamily& family, double t) {
    check_time(t);
    if (!family.rate1 || !family.rate2)
        throw usage_error("BranchPhaseFamily: both rate functions required");
    DiagonalPhaseState result;
    for (Branch k : branches) {
        for (Branch l : branches) {
            const double phase = (family.rate1(k, k, l) + family.rate2(l, k, l)) * t;
            result.state.amp(k, l) = 0.5 * std::exp(1i * phase);
        }
    }
    return result;
}

} // namespace gielab
