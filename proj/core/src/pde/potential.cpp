#include "gielab/pde/potential.hpp"

#include "gielab/errors.hpp"

namespace gielab::pde {

namespace {

struct Builder {
    const Wavefunction2D& wf;
    const std::optional<BohmianConfig>& config;
    double g;
    double eps;
    SpectralWorkspace& ws;

    PotentialData operator()(const NewtonModel&) const {
        const Grid1D& grid = wf.grid;
        Eigen::MatrixXd v(grid.n, grid.n);
        for (int b = 0; b < grid.n; ++b)
            for (int a = 0; a < grid.n; ++a)
                v(a, b) = -g * soft_kernel(grid.x(a) - grid.x(b), eps);
        return v;
    }

    PotentialData operator()(const NsModel&) const {
        const auto kernel = [this](double r) { return soft_kernel(r, eps); };
        SeparablePotential sep;
        sep.v1 = -g * ws.convolve(wf.marginal2(), kernel);
        sep.v2 = -g * ws.convolve(wf.marginal1(), kernel);
        return sep;
    }

    PotentialData operator()(const NsbModel&) const {
        if (!config)
            throw usage_error("potential: NSB model requires a particle configuration");
        const Grid1D& grid = wf.grid;
        SeparablePotential sep;
        sep.v1.resize(grid.n);
        sep.v2.resize(grid.n);
        for (int j = 0; j < grid.n; ++j) {
            sep.v1(j) = -g * soft_kernel(grid.x(j) - config->X2, eps);
            sep.v2(j) = -g * soft_kernel(grid.x(j) - config->X1, eps);
        }
        return sep;
    }

    PotentialData operator()(const SeparableGenericModel& model) const {
        if (!model.v1 || !model.v2)
            throw usage_error("potential: SeparableGeneric requires both part functions");
        const Grid1D& grid = wf.grid;
        SeparablePotential sep;
        sep.v1.resize(grid.n);
        sep.v2.resize(grid.n);
        for (int j = 0; j < grid.n; ++j) {
            sep.v1(j) = model.v1(grid.x(j));
            sep.v2(j) = model.v2(grid.x(j));
        }
        return sep;
    }

    PotentialData operator()(const DgDiagonalModel&) const {
        throw usage_error("potential: the diagonal-phase construction has no grid dynamics");
    }
};

} // namespace

PotentialData build_potential(const PotentialModel& model, const Wavefunction2D& wf,
                              const std::optional<BohmianConfig>& config, double g,
                              double eps, SpectralWorkspace& ws) {
    if (!(g >= 0.0)) throw validation_error("potential: g >= 0 violated");
    if (!(eps >= wf.grid.dx)) throw validation_error("potential: eps >= dx violated");
    return std::visit(Builder{wf, config, g, eps, ws}, model);
}

Eigen::MatrixXd expand_potential(const PotentialData& data, int n) {
    if (const auto* sep = std::get_if<SeparablePotential>(&data)) {
        Eigen::MatrixXd v(n, n);
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                v(a, b) = sep->v1(a) + sep->v2(b);
        return v;
    }
    return std::get<Eigen::MatrixXd>(data);
}

Eigen::MatrixXd potential_grid(const PotentialModel& model, const Wavefunction2D& wf,
                               const std::optional<BohmianConfig>& config, double g,
                               double eps) {
    SpectralWorkspace ws(wf.grid);
    return expand_potential(build_potential(model, wf, config, g, eps, ws), wf.grid.n);
}

} // namespace gielab::pde
