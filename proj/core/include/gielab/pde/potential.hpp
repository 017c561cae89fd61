#pragma once

#include <optional>
#include <variant>

#include <Eigen/Dense>

#include "gielab/model.hpp"
#include "gielab/pde/bohmian.hpp"
#include "gielab/pde/spectral.hpp"
#include "gielab/pde/wavefunction.hpp"

namespace gielab::pde {

/// Softened interaction kernel 1/sqrt(r^2 + eps^2).
inline double soft_kernel(double r, double eps) {
    return 1.0 / std::sqrt(r * r + eps * eps);
}

/// Additively separable potential V(x1, x2) = v1(x1) + v2(x2), kept in parts
/// so the exponentiated propagator factorizes exactly.
struct SeparablePotential {
    Eigen::VectorXd v1;
    Eigen::VectorXd v2;
};

/// Either separable parts or a full pair-coupled grid.
using PotentialData = std::variant<SeparablePotential, Eigen::MatrixXd>;

/// Builds the model potential from the current wave function and (for NSB)
/// particle configuration:
///   Newton:  V = -g / sqrt((x1-x2)^2 + eps^2)                (full grid)
///   NS:      V = -g [(K * rho2)(x1) + (K * rho1)(x2)]        (separable)
///   NSB:     V = -g [K(x1 - X2) + K(x2 - X1)]                (separable)
///   SeparableGeneric: caller-supplied v1(x1) + v2(x2)        (separable)
/// Self-interaction terms are omitted throughout.
PotentialData build_potential(const PotentialModel& model, const Wavefunction2D& wf,
                              const std::optional<BohmianConfig>& config, double g,
                              double eps, SpectralWorkspace& ws);

/// Materialized n x n potential grid (the separable cases are expanded as
/// v1(x1) + v2(x2)).
Eigen::MatrixXd potential_grid(const PotentialModel& model, const Wavefunction2D& wf,
                               const std::optional<BohmianConfig>& config, double g,
                               double eps);

Eigen::MatrixXd expand_potential(const PotentialData& data, int n);

} // namespace gielab::pde
