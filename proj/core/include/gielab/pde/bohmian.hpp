#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gielab/pde/grid.hpp"
#include "gielab/pde/wavefunction.hpp"

namespace gielab::pde {

/// Actual particle positions of the pilot-wave configuration.
struct BohmianConfig {
    double X1 = 0.0;
    double X2 = 0.0;

    void check_inside(const Grid1D& grid) const;
};

using Velocity = std::pair<double, double>;

/// Guidance velocity field v_i = (hbar_eff / m_i) Im(d_i psi / psi) sampled
/// on the grid from spectral gradients; point evaluations are bilinear
/// interpolations of the sampled field. psi is held fixed for the lifetime of
/// the object (one integrator stage).
class VelocityField {
public:
    VelocityField(const Wavefunction2D& wf, double hbar_eff, double m1, double m2);

    /// Throws node_proximity_error when the interpolated density at the point
    /// falls below 1e-12 of the peak density.
    Velocity operator()(const BohmianConfig& at) const;

private:
    Grid1D grid_;
    Eigen::MatrixXd v1_, v2_, density_;
    double peak_density_ = 0.0;
};

/// One-shot guidance velocity at a configuration.
Velocity bohmian_velocity(const Wavefunction2D& wf, const BohmianConfig& config,
                          double hbar_eff = 1.0, double m1 = 1.0, double m2 = 1.0);

using VelocityFn = std::function<Velocity(const BohmianConfig&)>;

/// Classical RK4 update of the configuration over one dt with the velocity
/// field frozen across the four stages. Throws stability_error if the updated
/// configuration leaves the grid domain.
BohmianConfig step_bohmian(const BohmianConfig& config, const VelocityFn& field, double dt,
                           const Grid1D& grid);

/// Convenience overload freezing the wave function's own field.
BohmianConfig step_bohmian(const BohmianConfig& config, const Wavefunction2D& wf, double dt,
                           double hbar_eff = 1.0, double m1 = 1.0, double m2 = 1.0);

/// Samples a configuration from |amps|^2 dx^2 by inverse CDF over the
/// flattened grid (x1-major traversal). Deterministic for a fixed seed.
BohmianConfig born_sample(const Wavefunction2D& wf, std::uint64_t rng_seed);

/// n_samples draws from a single generator seeded once; deterministic order.
std::vector<BohmianConfig> born_samples(const Wavefunction2D& wf, std::uint64_t rng_seed,
                                        int n_samples);

} // namespace gielab::pde
