#include "gielab/pde/grid.hpp"

#include <cmath>
#include <numbers>

namespace gielab::pde {

double Grid1D::k(int j) const noexcept {
    const double dk = 2.0 * std::numbers::pi / length();
    const int m = j < n / 2 ? j : j - n;
    return dk * m;
}

int Grid1D::nearest_index(double x) const noexcept {
    int j = static_cast<int>(std::lround((x - x_min) / dx));
    if (j < 0) j = 0;
    if (j >= n) j = n - 1;
    return j;
}

void Grid1D::validate() const {
    if (n < 64) throw validation_error("Grid1D: n >= 64 violated");
    if ((n & (n - 1)) != 0) throw validation_error("Grid1D: n must be a power of two");
    if (!(x_max > x_min)) throw validation_error("Grid1D: x_max > x_min violated");
    if (std::abs(x_max + x_min) > 1e-12 * (x_max - x_min))
        throw validation_error("Grid1D: domain symmetric about 0 violated");
    if (std::abs(dx - (x_max - x_min) / n) > 1e-12 * dx)
        throw validation_error("Grid1D: dx = (x_max - x_min)/n violated");
}

} // namespace gielab::pde
