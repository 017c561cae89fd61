#pragma once

#include <stdexcept>
#include <string>

namespace gielab {

/// Violated input contract (bad geometry, non-normalized state, ...).
/// The message names the violated constraint.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// API misuse independent of numeric values (e.g. NSB evolution without a
/// particle configuration).
class usage_error : public std::logic_error {
public:
    explicit usage_error(const std::string& what) : std::logic_error(what) {}
};

/// Numerical breakdown during time stepping. Carries the step index at which
/// the problem was detected.
class stability_error : public std::runtime_error {
public:
    stability_error(const std::string& what, long step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
    long step() const noexcept { return step_; }

private:
    long step_;
};

/// Bohmian velocity requested too close to a wave-function node.
/// Carries the probability density at the requested point so the caller can
/// decide whether to shrink dt or abort.
class node_proximity_error : public std::runtime_error {
public:
    node_proximity_error(const std::string& what, double density)
        : std::runtime_error(what), density_(density) {}
    double density() const noexcept { return density_; }

private:
    double density_;
};

} // namespace gielab
