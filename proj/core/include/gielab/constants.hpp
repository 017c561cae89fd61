#pragma once

#include "gielab/errors.hpp"

namespace gielab {

/// Physical constants used by the phase-model tier. Defaults are the CODATA
/// values; both may be overridden for dimensionless desk-scale runs.
struct PhysicalConstants {
    double G = 6.674e-11;          ///< gravitational constant, m^3 kg^-1 s^-2
    double hbar = 1.054571817e-34; ///< reduced Planck constant, J s

    void validate() const {
        if (!(G > 0.0)) throw validation_error("PhysicalConstants: G > 0 violated");
        if (!(hbar > 0.0)) throw validation_error("PhysicalConstants: hbar > 0 violated");
    }
};

} // namespace gielab
