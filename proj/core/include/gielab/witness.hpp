#pragma once

#include <Eigen/Dense>

#include "gielab/constants.hpp"
#include "gielab/geometry.hpp"
#include "gielab/phase_table.hpp"
#include "gielab/two_qubit.hpp"

namespace gielab {

/// The entanglement witness W = I(x)I - sx(x)sx - sy(x)sz - sz(x)sy in the
/// (LL, LR, RL, RR) basis. A negative expectation value certifies
/// entanglement; non-negative values are inconclusive.
struct WitnessOperator {
    Eigen::Matrix4cd matrix;
};

const WitnessOperator& witness_operator();

/// <psi|W|psi>. The imaginary residue is asserted <= 1e-12, then dropped.
double witness_pure(const TwoQubitPureState& state);

/// Tr(rho W), real within 1e-12.
double witness_mixed(const TwoQubitMixedState& rho);

/// Witness of the equal-modulus phase state amps = exp(i gamma_kl)/2:
/// W = 1 - [cos(gLL-gRR) + cos(gLR-gRL) + sin(gLR-gLL) + sin(gLR-gRR)
///          + sin(gRL-gLL) + sin(gRL-gRR)] / 2.
double witness_general(const PhaseTable& gammas);

/// Separable case: W = 1 - cos(g1L-g1R) cos(g2L-g2R), always >= 0.
double witness_separable(double g1L, double g1R, double g2L, double g2R);

/// Closed forms for the three concrete models at the given geometry.
double witness_closed_newton(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                             double t);
double witness_closed_ns(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                         double t);
double witness_closed_nsb(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                          double t);

} // namespace gielab
