#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gielab::tools {

struct WitnessArgs {
    double d = 450e-6;
    double delta = 250e-6;
    double m1 = 1e-14;
    double m2 = 1e-14;
    double t_max = 4.0;
    int samples = 2000;
    std::string models = "N,NS,NSB";
    std::string out = "witness";
    std::string format = "all"; // csv|json|svg|all
};

struct SweepArgs {
    std::string var = "m"; // d|delta|m
    double from = 1e-15;
    double to = 1e-13;
    int points = 25;
    std::string spacing = "log"; // linear|log
    std::string objective = "wn-first-negative"; // wn-at-t|wn-first-negative
    double t = 1.0;
    double t_max = 50.0; // crossing-scan horizon
    double d = 450e-6;
    double delta = 250e-6;
    double m1 = 1e-14;
    double m2 = 1e-14;
    std::string out = "sweep";
};

struct PdeVerifyArgs {
    std::string scenario;
    int n = 0;
    double dt = 0.0;
    long steps = 0;
    double g = -1.0;
    std::uint64_t seed = 20260809;
    std::string out = "pde";
};

int run_witness(const WitnessArgs& args);
int run_sweep(const SweepArgs& args);
int run_pde_verify(const PdeVerifyArgs& args);

/// Worker count: GIE_LAB_THREADS caps the pool; 0 or unset means the hardware
/// default.
unsigned worker_count();

/// Full CLI entry point (argument parsing, config merge, exit-code mapping).
int run_cli(const std::vector<std::string>& args);

} // namespace gielab::tools
