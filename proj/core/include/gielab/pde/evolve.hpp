#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gielab/model.hpp"
#include "gielab/pde/bohmian.hpp"
#include "gielab/pde/potential.hpp"
#include "gielab/pde/wavefunction.hpp"

namespace gielab::pde {

struct OracleParams {
    double mass1 = 1.0;
    double mass2 = 1.0;
    double g = 1.0;        ///< coupling (stand-in for G m1 m2 at desk scale)
    double eps = 0.0;      ///< softening length; 0 selects the default 2 dx
    double dt = 2e-3;
    long steps = 500;
    PotentialModel model = NewtonModel{};
    double hbar_eff = 1.0;
    bool kinetic_enabled = true;
    long sample_every = 10; ///< diagnostics sampling interval, in steps

    double softening(const Grid1D& grid) const {
        return eps > 0.0 ? eps : 2.0 * grid.dx;
    }
    void validate(const Grid1D& grid) const;
};

struct Diagnostics {
    long step = 0;
    double t = 0.0;
    double norm_error = 0.0; ///< |1 - norm^2|
    double entropy = 0.0;
    std::optional<BohmianConfig> config;
    double energy = 0.0;     ///< <T> + <V> with the instantaneous potential
};

/// Separable potential parts applied at one step, recorded so single-particle
/// factors can be re-propagated against the frozen fields.
struct SeparableStepRecord {
    Eigen::VectorXd v1;
    Eigen::VectorXd v2;
};

struct EvolveResult {
    std::vector<Diagnostics> samples;
    Wavefunction2D final_wf;
    std::optional<BohmianConfig> final_config;
    double max_norm_error = 0.0;
    double max_entropy = 0.0;
    std::vector<SeparableStepRecord> separable_record; ///< empty for Newton
};

using Observer = std::function<void(const Diagnostics&, const Wavefunction2D&)>;

/// Second-order Strang stepper: half kinetic (spectral), full potential phase
/// with the potential rebuilt from the current (psi, X), half kinetic. For the
/// NSB model the configuration advances once per step by RK4 against the
/// mid-step wave function (frozen across the four stages).
class Evolver {
public:
    Evolver(Wavefunction2D initial, OracleParams params,
            std::optional<BohmianConfig> config = std::nullopt);
    ~Evolver();

    Evolver(const Evolver&) = delete;
    Evolver& operator=(const Evolver&) = delete;

    void step();
    /// Replays one step with negated dt; for separable models the recorded
    /// potential of forward step `replay_index` is reused, for static models
    /// the potential is rebuilt. Supports the time-reversal check.
    void step_backward(long replay_index);

    const Wavefunction2D& wavefunction() const;
    const std::optional<BohmianConfig>& config() const;
    long step_index() const;
    double time() const;
    double max_norm_error() const;
    const std::vector<SeparableStepRecord>& separable_record() const;

    Diagnostics diagnostics(bool with_entropy = true) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Runs `params.steps` steps, sampling diagnostics (norm, Schmidt entropy,
/// configuration, energy) every `params.sample_every` steps plus the first and
/// last. config0 is required iff the model is NSB.
EvolveResult evolve(const Wavefunction2D& initial, const OracleParams& params,
                    std::optional<BohmianConfig> config0 = std::nullopt,
                    const Observer& observer = {});

struct DysonReport {
    double l2_error = 0.0;   ///< L2 distance |psi_full - psi1 (x) psi2| at final time
    double max_entropy = 0.0;
};

/// Re-propagates the two single-particle factors of a separable-model run
/// against the recorded per-step fields and compares their tensor product
/// with the full two-particle solution.
struct SeparableRunRecord {
    Wavefunction2D initial;
    Wavefunction2D final_wf;
    OracleParams params;
    std::vector<SeparableStepRecord> potentials;
    double max_entropy = 0.0;
};

SeparableRunRecord run_separable_reference(const Wavefunction2D& initial,
                                           const OracleParams& params,
                                           std::optional<BohmianConfig> config0 = std::nullopt);

DysonReport dyson_factorization_check(const SeparableRunRecord& run);

/// Evolves forward `steps` steps and back again (dt negated, potentials
/// replayed); returns the L2 distance to the initial state.
double time_reversal_l2_error(const Wavefunction2D& initial, const OracleParams& params,
                              std::optional<BohmianConfig> config0 = std::nullopt);

} // namespace gielab::pde
