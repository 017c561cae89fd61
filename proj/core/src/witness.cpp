#include "gielab/witness.hpp"

#include <cmath>
#include <complex>

#include <unsupported/Eigen/KroneckerProduct>

#include "gielab/errors.hpp"
#include "gielab/phase_evolution.hpp"

namespace gielab {

namespace {

constexpr double kImagTol = 1e-12;

Eigen::Matrix4cd build_witness() {
    using C = std::complex<double>;
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd sx, sy, sz;
    sx << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
    sy << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
    sz << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
    Eigen::Matrix4cd w = Eigen::kroneckerProduct(id, id).eval();
    w -= Eigen::kroneckerProduct(sx, sx);
    w -= Eigen::kroneckerProduct(sy, sz);
    w -= Eigen::kroneckerProduct(sz, sy);
    return w;
}

double drop_imaginary(std::complex<double> value, const char* what) {
    if (std::abs(value.imag()) > kImagTol)
        throw validation_error(std::string(what) + ": imaginary residue exceeds 1e-12");
    return value.real();
}

} // namespace

const WitnessOperator& witness_operator() {
    static const WitnessOperator op{build_witness()};
    return op;
}

double witness_pure(const TwoQubitPureState& state) {
    state.validate();
    const std::complex<double> value =
        (state.amps.adjoint() * witness_operator().matrix * state.amps)(0, 0);
    return drop_imaginary(value, "witness_pure");
}

double witness_mixed(const TwoQubitMixedState& rho) {
    rho.validate();
    const std::complex<double> value = (rho.rho * witness_operator().matrix).trace();
    return drop_imaginary(value, "witness_mixed");
}

double witness_general(const PhaseTable& gammas) {
    if (!gammas.all_finite())
        throw validation_error("witness_general: phases must be finite");
    const double gLL = gammas(Branch::L, Branch::L);
    const double gLR = gammas(Branch::L, Branch::R);
    const double gRL = gammas(Branch::R, Branch::L);
    const double gRR = gammas(Branch::R, Branch::R);
    return 1.0 - 0.5 * (std::cos(gLL - gRR) + std::cos(gLR - gRL) + std::sin(gLR - gLL) +
                        std::sin(gLR - gRR) + std::sin(gRL - gLL) + std::sin(gRL - gRR));
}

double witness_separable(double g1L, double g1R, double g2L, double g2R) {
    if (!std::isfinite(g1L) || !std::isfinite(g1R) || !std::isfinite(g2L) ||
        !std::isfinite(g2R))
        throw validation_error("witness_separable: phases must be finite");
    return 1.0 - std::cos(g1L - g1R) * std::cos(g2L - g2R);
}

double witness_closed_newton(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                             double t) {
    const double gamma = gravitational_phase_rate(geom, consts);
    const double a = gamma * t / geom.d;
    const double b = gamma * t / (geom.d + geom.delta);
    const double c = gamma * t / (geom.d - geom.delta);
    return 0.5 - 0.5 * std::cos(b - c) + std::sin(a - b) + std::sin(a - c);
}

double witness_closed_ns(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                         double t) {
    const double gamma = gravitational_phase_rate(geom, consts);
    const double x = gamma * t / (geom.d + geom.delta) - gamma * t / (geom.d - geom.delta);
    const double c = std::cos(x);
    return 1.0 - c * c;
}

double witness_closed_nsb(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                          double t) {
    const double gamma = gravitational_phase_rate(geom, consts);
    const double a = gamma * t / geom.d;
    const double b = gamma * t / (geom.d + geom.delta);
    const double c = gamma * t / (geom.d - geom.delta);
    const double s = std::cos(a - b) + std::cos(a - c);
    return 1.0 - 0.25 * s * s;
}

} // namespace gielab
