#include "gielab/pde/wavefunction.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace gielab::pde {

void Wavefunction2D::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw validation_error("Wavefunction2D: cannot normalize zero state");
    amps /= std::sqrt(n2);
}

void Wavefunction2D::check_norm(double tol) const {
    if (std::abs(1.0 - norm_squared()) > tol)
        throw validation_error("Wavefunction2D: norm deviates from 1 beyond tolerance");
}

Eigen::VectorXd Wavefunction2D::marginal1() const {
    return amps.cwiseAbs2().rowwise().sum() * grid.dx;
}

Eigen::VectorXd Wavefunction2D::marginal2() const {
    return amps.cwiseAbs2().colwise().sum().transpose() * grid.dx;
}

Eigen::VectorXcd gaussian_factor(const Grid1D& grid, double center, double width) {
    if (!(width >= 2.0 * grid.dx))
        throw validation_error("gaussian_factor: width >= 2 dx violated (grid cannot resolve it)");
    if (!(std::abs(center) + 4.0 * width < grid.x_max))
        throw validation_error("gaussian_factor: |center| + 4 width < x_max violated");
    Eigen::VectorXcd f(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double u = (grid.x(j) - center) / (2.0 * width);
        f(j) = std::exp(-u * u);
    }
    f /= std::sqrt(f.squaredNorm() * grid.dx);
    return f;
}

Wavefunction2D product_wavefunction(const Grid1D& grid, const Eigen::VectorXcd& f1,
                                    const Eigen::VectorXcd& f2) {
    Wavefunction2D wf;
    wf.grid = grid;
    wf.amps = f1 * f2.transpose();
    wf.normalize();
    return wf;
}

Wavefunction2D gaussian_product(const Grid1D& grid, double center1, double center2,
                                double width1, double width2) {
    return product_wavefunction(grid, gaussian_factor(grid, center1, width1),
                                gaussian_factor(grid, center2, width2));
}

Wavefunction2D two_peak_entangled(const Grid1D& grid, double cA, double cB, double cC,
                                  double cD, double width) {
    const Eigen::VectorXcd gA = gaussian_factor(grid, cA, width);
    const Eigen::VectorXcd gB = gaussian_factor(grid, cB, width);
    const Eigen::VectorXcd gC = gaussian_factor(grid, cC, width);
    const Eigen::VectorXcd gD = gaussian_factor(grid, cD, width);
    Wavefunction2D wf;
    wf.grid = grid;
    wf.amps = gA * gB.transpose() + gC * gD.transpose();
    wf.normalize();
    return wf;
}

double schmidt_entropy(const Wavefunction2D& wf) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(wf.amps * wf.grid.dx);
    const Eigen::VectorXd s = svd.singularValues();
    const double total = s.squaredNorm();
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const double p = s(i) * s(i) / total;
        if (p > 0.0) entropy -= p * std::log(p);
    }
    return entropy;
}

double edge_mass(const Wavefunction2D& wf) {
    const int n = wf.grid.n;
    const double cell = wf.grid.dx * wf.grid.dx;
    double mass = 0.0;
    for (int j : {0, 1, n - 2, n - 1}) {
        mass += wf.amps.row(j).squaredNorm() * cell;
        mass += wf.amps.col(j).squaredNorm() * cell;
    }
    return mass;
}

} // namespace gielab::pde
