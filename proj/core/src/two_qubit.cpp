#include "gielab/two_qubit.hpp"

#include <Eigen/Eigenvalues>

#include "gielab/errors.hpp"

namespace gielab {

namespace {
constexpr double kStateTol = 1e-12;
}

void TwoQubitPureState::validate() const {
    if (norm_error() > kStateTol)
        throw validation_error("TwoQubitPureState: sum |amp|^2 = 1 within 1e-12 violated");
}

TwoQubitPureState TwoQubitPureState::initial() {
    TwoQubitPureState s;
    s.amps.setConstant(std::complex<double>(0.5, 0.0));
    return s;
}

void TwoQubitMixedState::validate() const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
        throw validation_error("TwoQubitMixedState: Hermitian within 1e-12 violated");
    if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > kStateTol)
        throw validation_error("TwoQubitMixedState: trace = 1 within 1e-12 violated");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kStateTol)
        throw validation_error("TwoQubitMixedState: eigenvalues >= -1e-12 violated");
}

TwoQubitMixedState TwoQubitMixedState::from_pure(const TwoQubitPureState& psi) {
    TwoQubitMixedState m;
    m.rho = psi.amps * psi.amps.adjoint();
    return m;
}

} // namespace gielab
