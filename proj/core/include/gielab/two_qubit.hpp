#pragma once

#include <complex>

#include <Eigen/Dense>

#include "gielab/geometry.hpp"

namespace gielab {

/// Pure state of the two-qubit L/R (x) L/R system. Amplitudes are stored in
/// the fixed basis order (LL, LR, RL, RR).
struct TwoQubitPureState {
    Eigen::Vector4cd amps = Eigen::Vector4cd::Zero();

    std::complex<double> amp(Branch k, Branch l) const {
        return amps(static_cast<Eigen::Index>(pair_index(k, l)));
    }
    std::complex<double>& amp(Branch k, Branch l) {
        return amps(static_cast<Eigen::Index>(pair_index(k, l)));
    }

    double norm_error() const { return std::abs(amps.squaredNorm() - 1.0); }

    /// Throws validation_error unless sum |amp|^2 = 1 within 1e-12.
    void validate() const;

    /// The t = 0 product state with all four amplitudes equal to 1/2.
    static TwoQubitPureState initial();
};

/// Density matrix over the same (LL, LR, RL, RR) basis.
struct TwoQubitMixedState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

    /// Hermitian within 1e-12, trace 1 within 1e-12, eigenvalues >= -1e-12.
    void validate() const;

    static TwoQubitMixedState from_pure(const TwoQubitPureState& psi);
};

} // namespace gielab
