#include "gielab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "gielab/errors.hpp"

namespace gielab {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

} // namespace

double entanglement_entropy(const TwoQubitPureState& state) {
    state.validate();
    // Closed-form singular values of the 2x2 reshape M[k][l] = amps[2k+l]:
    // s^2 are the eigenvalues of M^H M, obtained from trace and determinant.
    const std::complex<double> mLL = state.amps(0);
    const std::complex<double> mLR = state.amps(1);
    const std::complex<double> mRL = state.amps(2);
    const std::complex<double> mRR = state.amps(3);
    const double trace = std::norm(mLL) + std::norm(mLR) + std::norm(mRL) + std::norm(mRR);
    const std::complex<double> det = mLL * mRR - mLR * mRL;
    const double det2 = std::norm(det);
    const double disc = std::sqrt(std::max(trace * trace - 4.0 * det2, 0.0));
    // Schmidt weights, normalized by the trace to absorb rounding in the norm.
    const double p1 = std::clamp(0.5 * (trace + disc) / trace, 0.0, 1.0);
    const double p2 = std::clamp(1.0 - p1, 0.0, 1.0);
    return entropy_term(p1) + entropy_term(p2);
}

double ppt_min_eigenvalue(const TwoQubitMixedState& rho) {
    rho.validate();
    // Partial transpose over qubit 2: (k,l),(k',l') -> (k,l'),(k',l).
    Eigen::Matrix4cd pt;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int kp = 0; kp < 2; ++kp)
                for (int lp = 0; lp < 2; ++lp)
                    pt(2 * k + l, 2 * kp + lp) = rho.rho(2 * k + lp, 2 * kp + l);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace gielab
