#pragma once

#include "gielab/errors.hpp"

namespace gielab::pde {

/// Uniform periodic 1D grid shared by both particle axes. Points are
/// x_j = x_min + j dx for j = 0..n-1 (x_max is the wrapped image of x_min).
struct Grid1D {
    int n = 256;       ///< points per axis, power of two, >= 64
    double x_min = -8.0;
    double x_max = 8.0;
    double dx = 1.0 / 16.0;

    static Grid1D make(int n, double half_width) {
        Grid1D g;
        g.n = n;
        g.x_min = -half_width;
        g.x_max = half_width;
        g.dx = (g.x_max - g.x_min) / n;
        g.validate();
        return g;
    }

    double x(int j) const noexcept { return x_min + j * dx; }

    /// Angular wavenumber of FFT bin j (negative frequencies in the upper half).
    double k(int j) const noexcept;

    /// Length of the periodic box.
    double length() const noexcept { return x_max - x_min; }

    /// Index of the grid point nearest to x (x inside the domain).
    int nearest_index(double x) const noexcept;

    void validate() const;
};

} // namespace gielab::pde
