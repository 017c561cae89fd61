#include <iostream>
#include <set>

#include "CLI11.hpp"

#include "gielab/errors.hpp"
#include "gielab/version.hpp"
#include "commands.hpp"
#include "config_file.hpp"
#include "output.hpp"

namespace gielab::tools {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitStability = 4;

std::set<std::string> option_keys(const CLI::App* sub) {
    std::set<std::string> keys;
    for (const CLI::Option* opt : sub->get_options()) {
        for (const std::string& name : opt->get_lnames())
            if (name != "help" && name != "config") keys.insert(name);
    }
    return keys;
}

/// Extracts --config from the raw arguments and injects the file's key=value
/// pairs ahead of the user's flags (which therefore win on conflicts).
std::vector<std::string> resolve_config(const CLI::App* sub,
                                        const std::vector<std::string>& args) {
    std::string config_path;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw validation_error("--config expects a path");
            config_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (config_path.empty()) return rest;
    return merge_config_args(load_config_file(config_path, option_keys(sub)), rest);
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Entanglement witnesses and a two-particle grid solver for "
                 "semi-classical gravity models"};
    app.set_version_flag("--version", std::string(gielab::version));
    app.require_subcommand(1);

    WitnessArgs witness;
    CLI::App* witness_cmd =
        app.add_subcommand("witness", "Witness curves W_N, W_NS, W_NSB over time");
    witness_cmd->add_option("--d", witness.d, "inter-particle separation (m)");
    witness_cmd->add_option("--delta", witness.delta, "L/R split per particle (m)");
    witness_cmd->add_option("--m1", witness.m1, "mass of particle 1 (kg)");
    witness_cmd->add_option("--m2", witness.m2, "mass of particle 2 (kg)");
    witness_cmd->add_option("--t-max", witness.t_max, "time horizon (s)");
    witness_cmd->add_option("--samples", witness.samples, "number of time samples");
    witness_cmd->add_option("--models", witness.models, "comma list, subset of N,NS,NSB");
    witness_cmd->add_option("--out", witness.out, "output path stem");
    witness_cmd->add_option("--format", witness.format, "csv|json|svg|all");
    witness_cmd->add_option("--config", "key=value config file (flags override)");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep d, delta or m against a "
                                                      "witness objective");
    sweep_cmd->add_option("--var", sweep.var, "swept variable: d|delta|m");
    sweep_cmd->add_option("--from", sweep.from, "range start");
    sweep_cmd->add_option("--to", sweep.to, "range end");
    sweep_cmd->add_option("--points", sweep.points, "number of rows");
    sweep_cmd->add_option("--spacing", sweep.spacing, "linear|log");
    sweep_cmd->add_option("--objective", sweep.objective, "wn-at-t|wn-first-negative");
    sweep_cmd->add_option("--t", sweep.t, "evaluation time for wn-at-t (s)");
    sweep_cmd->add_option("--t-max", sweep.t_max, "scan horizon for the crossing (s)");
    sweep_cmd->add_option("--d", sweep.d, "base separation (m)");
    sweep_cmd->add_option("--delta", sweep.delta, "base split (m)");
    sweep_cmd->add_option("--m1", sweep.m1, "base mass 1 (kg)");
    sweep_cmd->add_option("--m2", sweep.m2, "base mass 2 (kg)");
    sweep_cmd->add_option("--out", sweep.out, "output path stem");
    sweep_cmd->add_option("--config", "key=value config file (flags override)");

    PdeVerifyArgs pde;
    CLI::App* pde_cmd =
        app.add_subcommand("pde-verify", "Run a grid-solver verification scenario");
    pde_cmd->add_option("--scenario", pde.scenario,
                        "separable-ns|separable-nsb|newton-entangles|dyson-factorization|"
                        "equivariance|si-frozen-phases")
        ->required();
    pde_cmd->add_option("--n", pde.n, "grid points per axis (0 = scenario default)");
    pde_cmd->add_option("--dt", pde.dt, "time step (0 = scenario default)");
    pde_cmd->add_option("--steps", pde.steps, "step count (0 = scenario default)");
    pde_cmd->add_option("--g", pde.g, "coupling (negative = scenario default)");
    pde_cmd->add_option("--seed", pde.seed, "RNG seed");
    pde_cmd->add_option("--out", pde.out, "output path stem");
    pde_cmd->add_option("--config", "key=value config file (flags override)");

    try {
        // Config handling needs the subcommand first; peel it off, merge the
        // file values, then hand CLI11 the final vector.
        if (args.empty()) throw CLI::CallForHelp();
        std::vector<std::string> final_args = args;
        const std::string& first = args.front();
        CLI::App* sub = nullptr;
        for (CLI::App* candidate : {witness_cmd, sweep_cmd, pde_cmd})
            if (candidate->get_name() == first) sub = candidate;
        if (sub) {
            std::vector<std::string> sub_args(args.begin() + 1, args.end());
            final_args = resolve_config(sub, sub_args);
            final_args.insert(final_args.begin(), first);
        }

        // CLI11 wants reversed argument order on this entry point.
        std::vector<std::string> reversed(final_args.rbegin(), final_args.rend());
        app.parse(reversed);

        if (*witness_cmd) return run_witness(witness);
        if (*sweep_cmd) return run_sweep(sweep);
        if (*pde_cmd) return run_pde_verify(pde);
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        std::cout << gielab::version << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const stability_error& e) {
        std::cerr << "numerical instability: " << e.what() << "\n";
        return kExitStability;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace gielab::tools
