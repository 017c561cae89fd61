#include "gielab/pde/bohmian.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gielab/errors.hpp"
#include "gielab/pde/spectral.hpp"

namespace gielab::pde {

namespace {

constexpr double kNodeGuard = 1e-12; ///< density floor relative to the peak

struct Bilinear {
    const Grid1D& grid;
    int a0, a1, b0, b1;
    double wa, wb; // fractional offsets

    Bilinear(const Grid1D& g, double x1, double x2) : grid(g) {
        const double fa = (x1 - g.x_min) / g.dx;
        const double fb = (x2 - g.x_min) / g.dx;
        a0 = static_cast<int>(std::floor(fa));
        b0 = static_cast<int>(std::floor(fb));
        wa = fa - a0;
        wb = fb - b0;
        // Periodic neighbors; configurations sit far from the edges, where
        // this reduces to the ordinary cell.
        const int n = g.n;
        a0 = ((a0 % n) + n) % n;
        b0 = ((b0 % n) + n) % n;
        a1 = (a0 + 1) % n;
        b1 = (b0 + 1) % n;
    }

    double operator()(const Eigen::MatrixXd& f) const {
        return (1 - wa) * (1 - wb) * f(a0, b0) + wa * (1 - wb) * f(a1, b0) +
               (1 - wa) * wb * f(a0, b1) + wa * wb * f(a1, b1);
    }
};

Velocity rk4_stage_sum(const BohmianConfig& config, const VelocityFn& field, double dt,
                       BohmianConfig& out) {
    const auto [k1x, k1y] = field(config);
    const auto [k2x, k2y] = field({config.X1 + 0.5 * dt * k1x, config.X2 + 0.5 * dt * k1y});
    const auto [k3x, k3y] = field({config.X1 + 0.5 * dt * k2x, config.X2 + 0.5 * dt * k2y});
    const auto [k4x, k4y] = field({config.X1 + dt * k3x, config.X2 + dt * k3y});
    out.X1 = config.X1 + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    out.X2 = config.X2 + dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    return {k1x, k1y};
}

} // namespace

void BohmianConfig::check_inside(const Grid1D& grid) const {
    if (!std::isfinite(X1) || !std::isfinite(X2) || X1 < grid.x_min || X1 >= grid.x_max ||
        X2 < grid.x_min || X2 >= grid.x_max)
        throw stability_error("BohmianConfig left the grid domain (likely misconfiguration)",
                              -1);
}

VelocityField::VelocityField(const Wavefunction2D& wf, double hbar_eff, double m1, double m2)
    : grid_(wf.grid) {
    SpectralWorkspace ws(wf.grid);
    const Eigen::MatrixXcd d1 = ws.derivative(wf.amps, 0);
    const Eigen::MatrixXcd d2 = ws.derivative(wf.amps, 1);
    const int n = grid_.n;
    v1_.resize(n, n);
    v2_.resize(n, n);
    density_.resize(n, n);
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            const std::complex<double> psi = wf.amps(a, b);
            const double rho = std::norm(psi);
            density_(a, b) = rho;
            if (rho > 0.0) {
                v1_(a, b) = hbar_eff / m1 * std::imag(d1(a, b) / psi);
                v2_(a, b) = hbar_eff / m2 * std::imag(d2(a, b) / psi);
            } else {
                v1_(a, b) = 0.0;
                v2_(a, b) = 0.0;
            }
        }
    }
    peak_density_ = density_.maxCoeff();
}

Velocity VelocityField::operator()(const BohmianConfig& at) const {
    at.check_inside(grid_);
    const Bilinear interp(grid_, at.X1, at.X2);
    const double rho = interp(density_);
    if (!(rho > kNodeGuard * peak_density_))
        throw node_proximity_error(
            "guidance velocity requested too close to a wave-function node", rho);
    return {interp(v1_), interp(v2_)};
}

Velocity bohmian_velocity(const Wavefunction2D& wf, const BohmianConfig& config,
                          double hbar_eff, double m1, double m2) {
    return VelocityField(wf, hbar_eff, m1, m2)(config);
}

BohmianConfig step_bohmian(const BohmianConfig& config, const VelocityFn& field, double dt,
                           const Grid1D& grid) {
    BohmianConfig next;
    rk4_stage_sum(config, field, dt, next);
    next.check_inside(grid);
    return next;
}

BohmianConfig step_bohmian(const BohmianConfig& config, const Wavefunction2D& wf, double dt,
                           double hbar_eff, double m1, double m2) {
    const VelocityField field(wf, hbar_eff, m1, m2);
    return step_bohmian(
        config, [&field](const BohmianConfig& at) { return field(at); }, dt, wf.grid);
}

namespace {

// 53-bit uniform in [0, 1); avoids distribution implementation differences.
double uniform01(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

} // namespace

std::vector<BohmianConfig> born_samples(const Wavefunction2D& wf, std::uint64_t rng_seed,
                                        int n_samples) {
    const int n = wf.grid.n;
    // Flattened cumulative weights, x1-major traversal (a * n + b).
    std::vector<double> cdf(static_cast<size_t>(n) * n);
    double total = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            total += wf.density(a, b);
            cdf[static_cast<size_t>(a) * n + b] = total;
        }
    std::mt19937_64 rng(rng_seed);
    std::vector<BohmianConfig> out;
    out.reserve(n_samples);
    for (int s = 0; s < n_samples; ++s) {
        const double u = uniform01(rng()) * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const size_t idx = it == cdf.end() ? cdf.size() - 1
                                           : static_cast<size_t>(it - cdf.begin());
        const int a = static_cast<int>(idx / n);
        const int b = static_cast<int>(idx % n);
        out.push_back({wf.grid.x(a), wf.grid.x(b)});
    }
    return out;
}

BohmianConfig born_sample(const Wavefunction2D& wf, std::uint64_t rng_seed) {
    return born_samples(wf, rng_seed, 1).front();
}

} // namespace gielab::pde
