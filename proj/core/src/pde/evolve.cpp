#include "gielab/pde/evolve.hpp"

#include <cmath>
#include <complex>

#include <Eigen/SVD>

#include "gielab/errors.hpp"

namespace gielab::pde {

namespace {

using namespace std::complex_literals;

constexpr double kNormDriftPerStep = 1e-6;
constexpr double kEdgeMassLimit = 1e-8;

bool model_is_separable(const PotentialModel& model) {
    return std::holds_alternative<NsModel>(model) || std::holds_alternative<NsbModel>(model) ||
           std::holds_alternative<SeparableGenericModel>(model);
}

bool model_is_static(const PotentialModel& model) {
    return std::holds_alternative<NewtonModel>(model) ||
           std::holds_alternative<SeparableGenericModel>(model);
}

} // namespace

void OracleParams::validate(const Grid1D& grid) const {
    if (!(mass1 > 0.0) || !(mass2 > 0.0))
        throw validation_error("OracleParams: masses must be positive");
    if (!(dt > 0.0)) throw validation_error("OracleParams: dt > 0 violated");
    if (!(steps > 0)) throw validation_error("OracleParams: steps > 0 violated");
    if (!(g >= 0.0)) throw validation_error("OracleParams: g >= 0 violated");
    if (!(hbar_eff > 0.0)) throw validation_error("OracleParams: hbar_eff > 0 violated");
    if (!(softening(grid) >= grid.dx))
        throw validation_error("OracleParams: eps >= dx violated");
    if (!(sample_every > 0)) throw validation_error("OracleParams: sample_every > 0 violated");
    if (std::holds_alternative<DgDiagonalModel>(model))
        throw usage_error("OracleParams: the diagonal-phase construction has no grid dynamics");
}

struct Evolver::Impl {
    Wavefunction2D wf;
    OracleParams params;
    std::optional<BohmianConfig> config;
    SpectralWorkspace ws;
    double eps;
    long step_index = 0;
    double max_norm_err = 0.0;
    bool separable;
    std::vector<SeparableStepRecord> record;

    // Precomputed pieces for the forward step.
    Eigen::VectorXcd kin1_half, kin2_half; // exp(-i hbar k^2/(2m) dt/2)
    Eigen::MatrixXd newton_v;              // static pair potential (Newton only)
    Eigen::MatrixXcd newton_phase;         // exp(-i V dt / hbar)
    SeparablePotential static_sep;         // static separable parts
    Eigen::VectorXcd static_phase1, static_phase2;
    bool has_static_sep = false;

    Impl(Wavefunction2D initial, OracleParams p, std::optional<BohmianConfig> cfg)
        : wf(std::move(initial)), params(std::move(p)), config(cfg), ws(wf.grid),
          eps(params.softening(wf.grid)), separable(model_is_separable(params.model)) {
        params.validate(wf.grid);
        wf.check_norm(1e-8);
        const bool is_nsb = std::holds_alternative<NsbModel>(params.model);
        if (is_nsb && !config)
            throw usage_error("evolve: NSB model requires an initial configuration");
        if (config) config->check_inside(wf.grid);

        const Grid1D& grid = wf.grid;
        if (params.kinetic_enabled) {
            kin1_half.resize(grid.n);
            kin2_half.resize(grid.n);
            for (int j = 0; j < grid.n; ++j) {
                const double k2 = grid.k(j) * grid.k(j);
                kin1_half(j) = std::exp(-0.5i * (params.hbar_eff * k2 / (2.0 * params.mass1)) *
                                        params.dt);
                kin2_half(j) = std::exp(-0.5i * (params.hbar_eff * k2 / (2.0 * params.mass2)) *
                                        params.dt);
            }
        }
        if (std::holds_alternative<NewtonModel>(params.model)) {
            newton_v = expand_potential(
                build_potential(params.model, wf, config, params.g, eps, ws), grid.n);
            newton_phase = (-1.0i * params.dt / params.hbar_eff * newton_v).array().exp();
        } else if (std::holds_alternative<SeparableGenericModel>(params.model)) {
            static_sep = std::get<SeparablePotential>(
                build_potential(params.model, wf, config, params.g, eps, ws));
            static_phase1 =
                (-1.0i * params.dt / params.hbar_eff * static_sep.v1).array().exp();
            static_phase2 =
                (-1.0i * params.dt / params.hbar_eff * static_sep.v2).array().exp();
            has_static_sep = true;
        }
        if (separable) record.reserve(static_cast<size_t>(params.steps));
    }

    void apply_kinetic_half(bool forward) {
        if (!params.kinetic_enabled) return;
        ws.fft2_forward(wf.amps);
        if (forward)
            wf.amps.array() *= (kin1_half * kin2_half.transpose()).array();
        else
            wf.amps.array() *= (kin1_half.conjugate() * kin2_half.conjugate().transpose()).array();
        ws.fft2_inverse(wf.amps);
    }

    void apply_separable_phase(const SeparablePotential& sep, double sdt) {
        const Eigen::VectorXcd p1 = (-1.0i * sdt / params.hbar_eff * sep.v1).array().exp();
        const Eigen::VectorXcd p2 = (-1.0i * sdt / params.hbar_eff * sep.v2).array().exp();
        wf.amps.array() *= (p1 * p2.transpose()).array();
    }

    /// One Strang step with signed dt. `replay` (if non-null) supplies the
    /// potential instead of rebuilding it; the configuration only advances on
    /// forward steps.
    void do_step(double sdt, const SeparableStepRecord* replay) {
        const bool forward = sdt > 0.0;
        const double norm_before = std::sqrt(wf.norm_squared());

        apply_kinetic_half(forward);

        if (std::holds_alternative<NewtonModel>(params.model)) {
            if (forward)
                wf.amps.array() *= newton_phase.array();
            else
                wf.amps.array() *= newton_phase.conjugate().array();
        } else if (has_static_sep && !replay) {
            if (forward) {
                wf.amps.array() *= (static_phase1 * static_phase2.transpose()).array();
                record.push_back({static_sep.v1, static_sep.v2});
            } else {
                wf.amps.array() *=
                    (static_phase1.conjugate() * static_phase2.conjugate().transpose()).array();
            }
        } else {
            SeparablePotential sep;
            if (replay) {
                sep.v1 = replay->v1;
                sep.v2 = replay->v2;
            } else {
                sep = std::get<SeparablePotential>(
                    build_potential(params.model, wf, config, params.g, eps, ws));
            }
            apply_separable_phase(sep, sdt);
            if (forward) {
                if (std::holds_alternative<NsbModel>(params.model)) {
                    // Mid-step wave function, frozen across the RK4 stages.
                    const VelocityField field(wf, params.hbar_eff, params.mass1, params.mass2);
                    try {
                        config = step_bohmian(
                            *config, [&field](const BohmianConfig& at) { return field(at); },
                            sdt, wf.grid);
                    } catch (const stability_error&) {
                        throw stability_error("configuration left the grid domain", step_index);
                    }
                }
                record.push_back({sep.v1, sep.v2});
            }
        }

        apply_kinetic_half(forward);

        if (wf.amps.hasNaN())
            throw stability_error("NaN detected in the wave function; reduce dt", step_index);
        const double norm_after = std::sqrt(wf.norm_squared());
        if (std::abs(norm_after - norm_before) > kNormDriftPerStep)
            throw stability_error("norm drift exceeded 1e-6 in one step; reduce dt",
                                  step_index);
        max_norm_err = std::max(max_norm_err, std::abs(1.0 - norm_after));
        if (edge_mass(wf) > kEdgeMassLimit)
            throw stability_error("support reached the domain boundary; enlarge the domain",
                                  step_index);
        step_index += forward ? 1 : -1;
    }

    double energy() {
        double e = 0.0;
        if (params.kinetic_enabled) {
            Eigen::MatrixXcd hat = wf.amps;
            ws.fft2_forward(hat);
            const double total = hat.squaredNorm();
            double kin = 0.0;
            for (int b = 0; b < wf.grid.n; ++b) {
                const double w2 = wf.grid.k(b) * wf.grid.k(b);
                for (int a = 0; a < wf.grid.n; ++a) {
                    const double w1 = wf.grid.k(a) * wf.grid.k(a);
                    kin += std::norm(hat(a, b)) * params.hbar_eff * params.hbar_eff *
                           (w1 / (2.0 * params.mass1) + w2 / (2.0 * params.mass2));
                }
            }
            e += kin / total;
        }
        if (std::holds_alternative<NewtonModel>(params.model)) {
            e += (newton_v.array() * wf.amps.cwiseAbs2().array()).sum() * wf.grid.dx *
                 wf.grid.dx;
        } else {
            const PotentialData data =
                build_potential(params.model, wf, config, params.g, eps, ws);
            const auto& sep = std::get<SeparablePotential>(data);
            e += (sep.v1.dot(wf.marginal1()) + sep.v2.dot(wf.marginal2())) * wf.grid.dx;
        }
        return e;
    }
};

Evolver::Evolver(Wavefunction2D initial, OracleParams params, std::optional<BohmianConfig> config)
    : impl_(std::make_unique<Impl>(std::move(initial), std::move(params), config)) {}

Evolver::~Evolver() = default;

void Evolver::step() { impl_->do_step(impl_->params.dt, nullptr); }

void Evolver::step_backward(long replay_index) {
    const SeparableStepRecord* replay = nullptr;
    if (!impl_->record.empty()) {
        if (replay_index < 0 || replay_index >= static_cast<long>(impl_->record.size()))
            throw usage_error("step_backward: replay index out of range");
        replay = &impl_->record[static_cast<size_t>(replay_index)];
    } else if (!model_is_static(impl_->params.model)) {
        throw usage_error("step_backward: no recorded potentials for a non-static model");
    }
    impl_->do_step(-impl_->params.dt, replay);
}

const Wavefunction2D& Evolver::wavefunction() const { return impl_->wf; }
const std::optional<BohmianConfig>& Evolver::config() const { return impl_->config; }
long Evolver::step_index() const { return impl_->step_index; }
double Evolver::time() const { return impl_->step_index * impl_->params.dt; }
double Evolver::max_norm_error() const { return impl_->max_norm_err; }
const std::vector<SeparableStepRecord>& Evolver::separable_record() const {
    return impl_->record;
}

Diagnostics Evolver::diagnostics(bool with_entropy) const {
    Diagnostics d;
    d.step = impl_->step_index;
    d.t = time();
    d.norm_error = std::abs(1.0 - std::sqrt(impl_->wf.norm_squared()));
    d.entropy = with_entropy ? schmidt_entropy(impl_->wf) : 0.0;
    d.config = impl_->config;
    d.energy = impl_->energy();
    return d;
}

EvolveResult evolve(const Wavefunction2D& initial, const OracleParams& params,
                    std::optional<BohmianConfig> config0, const Observer& observer) {
    Evolver evolver(initial, params, config0);
    EvolveResult result;
    result.final_wf = initial; // placeholder; replaced after the run

    const auto sample = [&]() {
        Diagnostics d = evolver.diagnostics(true);
        result.samples.push_back(d);
        result.max_entropy = std::max(result.max_entropy, d.entropy);
        if (observer) observer(d, evolver.wavefunction());
    };

    sample();
    for (long s = 0; s < params.steps; ++s) {
        evolver.step();
        if ((s + 1) % params.sample_every == 0 || s + 1 == params.steps) sample();
    }
    result.final_wf = evolver.wavefunction();
    result.final_config = evolver.config();
    result.max_norm_error = evolver.max_norm_error();
    result.separable_record = evolver.separable_record();
    return result;
}

SeparableRunRecord run_separable_reference(const Wavefunction2D& initial,
                                           const OracleParams& params,
                                           std::optional<BohmianConfig> config0) {
    if (!model_is_separable(params.model))
        throw usage_error("dyson reference: model must be additively separable");
    EvolveResult res = evolve(initial, params, config0);
    SeparableRunRecord record;
    record.initial = initial;
    record.final_wf = res.final_wf;
    record.params = params;
    record.potentials = std::move(res.separable_record);
    record.max_entropy = res.max_entropy;
    return record;
}

namespace {

/// Single-particle split-step propagation against a frozen field sequence.
Eigen::VectorXcd propagate_factor(Eigen::VectorXcd f, const Grid1D& grid,
                                  const OracleParams& params, double mass,
                                  const std::vector<SeparableStepRecord>& fields,
                                  bool first_particle, SpectralWorkspace& ws) {
    Eigen::VectorXcd kin_half(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double k2 = grid.k(j) * grid.k(j);
        kin_half(j) = std::exp(-0.5i * (params.hbar_eff * k2 / (2.0 * mass)) * params.dt);
    }
    for (const SeparableStepRecord& rec : fields) {
        if (params.kinetic_enabled) {
            ws.fft_forward(f);
            f.array() *= kin_half.array();
            ws.fft_inverse(f);
        }
        const Eigen::VectorXd& v = first_particle ? rec.v1 : rec.v2;
        f.array() *= (-1.0i * params.dt / params.hbar_eff * v).array().exp();
        if (params.kinetic_enabled) {
            ws.fft_forward(f);
            f.array() *= kin_half.array();
            ws.fft_inverse(f);
        }
    }
    return f;
}

} // namespace

DysonReport dyson_factorization_check(const SeparableRunRecord& run) {
    if (!model_is_separable(run.params.model))
        throw usage_error("dyson check: reference run must use a separable model");
    const Grid1D& grid = run.initial.grid;

    // Rank-1 factors of the initial product state via SVD.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(run.initial.amps,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s0 = svd.singularValues()(0);
    const double root = std::sqrt(s0);
    Eigen::VectorXcd f1 = svd.matrixU().col(0) * root;
    Eigen::VectorXcd f2 = svd.matrixV().col(0).conjugate() * root;

    SpectralWorkspace ws(grid);
    f1 = propagate_factor(std::move(f1), grid, run.params, run.params.mass1, run.potentials,
                          true, ws);
    f2 = propagate_factor(std::move(f2), grid, run.params, run.params.mass2, run.potentials,
                          false, ws);

    const Eigen::MatrixXcd product = f1 * f2.transpose();
    DysonReport report;
    report.l2_error = std::sqrt((run.final_wf.amps - product).squaredNorm()) * grid.dx;
    report.max_entropy = run.max_entropy;
    return report;
}

double time_reversal_l2_error(const Wavefunction2D& initial, const OracleParams& params,
                              std::optional<BohmianConfig> config0) {
    Evolver evolver(initial, params, config0);
    for (long s = 0; s < params.steps; ++s) evolver.step();
    const long recorded = static_cast<long>(evolver.separable_record().size());
    for (long s = params.steps - 1; s >= 0; --s)
        evolver.step_backward(recorded > 0 ? s : 0);
    return std::sqrt((evolver.wavefunction().amps - initial.amps).squaredNorm()) *
           initial.grid.dx;
}

} // namespace gielab::pde
