#pragma once

#include <complex>

#include <Eigen/Dense>

#include "gielab/pde/grid.hpp"

namespace gielab::pde {

/// Two-particle wave function sampled on the grid:
/// amps(a, b) ~ psi(x1_a, x2_b).
struct Wavefunction2D {
    Eigen::MatrixXcd amps;
    Grid1D grid;

    /// sum |amps|^2 dx^2
    double norm_squared() const { return amps.squaredNorm() * grid.dx * grid.dx; }

    void normalize();

    /// Throws validation_error if |1 - norm^2| > tol.
    void check_norm(double tol = 1e-8) const;

    /// Position density marginals: rho1(x1_a) = sum_b |amps(a,b)|^2 dx, etc.
    Eigen::VectorXd marginal1() const;
    Eigen::VectorXd marginal2() const;

    /// Probability density at a grid point.
    double density(int a, int b) const { return std::norm(amps(a, b)); }
};

/// Normalized 1D Gaussian factor exp(-(x-center)^2 / (4 width^2)); width is
/// the standard deviation of the position density |psi|^2.
Eigen::VectorXcd gaussian_factor(const Grid1D& grid, double center, double width);

/// Normalized product psi(x1, x2) = f1(x1) f2(x2).
Wavefunction2D product_wavefunction(const Grid1D& grid, const Eigen::VectorXcd& f1,
                                    const Eigen::VectorXcd& f2);

/// Product of two Gaussians. Preconditions: widths >= 2 dx and
/// |center| + 4 width < x_max (support must fit in the domain).
Wavefunction2D gaussian_product(const Grid1D& grid, double center1, double center2,
                                double width1, double width2);

/// (gA(x1) gB(x2) + gC(x1) gD(x2)) / sqrt(2) with the four Gaussian factors
/// given by (center, width) pairs. With disjoint peaks the Schmidt entropy is
/// ln 2; used as an entangled start for constancy checks.
Wavefunction2D two_peak_entangled(const Grid1D& grid, double cA, double cB, double cC,
                                  double cD, double width);

/// Schmidt entropy (nats) from the singular values of the amplitude matrix
/// scaled by dx; weights normalized to sum 1 before taking -sum p ln p.
double schmidt_entropy(const Wavefunction2D& wf);

/// Mass within two grid cells of the domain edges (run-validity monitor).
double edge_mass(const Wavefunction2D& wf);

} // namespace gielab::pde
