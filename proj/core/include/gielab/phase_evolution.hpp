#pragma once

#include <array>

#include "gielab/constants.hpp"
#include "gielab/geometry.hpp"
#include "gielab/model.hpp"
#include "gielab/phase_table.hpp"
#include "gielab/two_qubit.hpp"

namespace gielab {

/// gamma = G m1 m2 / hbar (m/s); gamma * t / r is a phase in radians.
double gravitational_phase_rate(const ExperimentGeometry& geom,
                                const PhysicalConstants& consts);

/// Pair coupling: gamma_kl = gamma t / r_kl. Not separable, so
/// separable_parts is absent.
PhaseTable newton_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                         double t);

/// Mean-field sourcing. Separable with
///   gamma_{1,L} = gamma t/(d+delta) + gamma t/d,   gamma_{1,R} = gamma t/(d-delta) + gamma t/d,
///   gamma_{2,L} = gamma t/(d-delta) + gamma t/d,   gamma_{2,R} = gamma t/(d+delta) + gamma t/d.
/// The overall factor 2*gamma*t/d is split evenly between the particles; only
/// phase differences are observable.
PhaseTable ns_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                     double t);

/// Point-particle sourcing conditioned on the actual configuration sitting in
/// branch pair (m, n): gamma_{1,k} = gamma t / |X_1k - X_2n|,
/// gamma_{2,l} = gamma t / |X_1m - X_2l|.
PhaseTable nsb_branch_phases(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                             Branch m, Branch n, double t);

/// State reached from the equal-amplitude product start under the given
/// model: amps[k][l] = exp(i gamma_kl(t)) / 2. Separable models produce an
/// exact product of two single-qubit factors.
TwoQubitPureState state_at(const PotentialModel& model, const ExperimentGeometry& geom,
                           const PhysicalConstants& consts, double t);

TwoQubitPureState state_from_phases(const PhaseTable& table);

/// Equal-weight mixture of the four branch-conditioned pure states:
/// rho = 1/4 sum_{m,n} |psi^{mn}><psi^{mn}|.
TwoQubitMixedState nsb_mixture(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                               double t);

/// The four branch-conditioned states |psi^{mn}_t> of a separable
/// branch-phase family, in (m,n) order (LL, LR, RL, RR). Each is a product
/// state.
std::array<TwoQubitPureState, 4> dg_branch_states(const BranchPhaseFamily& family, double t);

/// The state assembled from the diagonal phases only:
/// amps[k][l] = exp(i gamma^{kl}_{kl}(t)) / 2. Generally entangled -- and not
/// a solution of the family's dynamics (no single branch evolves into it);
/// the wrapper type keeps that flag attached to the value.
struct DiagonalPhaseState {
    TwoQubitPureState state;
    /// The dynamics produces the four dg_branch_states, never this state.
    static constexpr bool is_dynamical_solution = false;
};

DiagonalPhaseState dg_diagonal_state(const BranchPhaseFamily& family, double t);

} // namespace gielab
