#pragma once

#include <array>
#include <cstddef>

#include "gielab/errors.hpp"

namespace gielab {

/// Which arm of the single-particle superposition a wave packet sits in.
/// L < R, so iterating {L, R} is deterministic everywhere.
enum class Branch : int { L = 0, R = 1 };

inline constexpr std::array<Branch, 2> branches{Branch::L, Branch::R};

constexpr std::size_t index_of(Branch b) noexcept { return static_cast<std::size_t>(b); }

/// Index of the pair state |k>_1 |l>_2 in the fixed (LL, LR, RL, RR) basis.
constexpr std::size_t pair_index(Branch k, Branch l) noexcept {
    return 2 * index_of(k) + index_of(l);
}

constexpr const char* to_string(Branch b) noexcept { return b == Branch::L ? "L" : "R"; }

/// Two masses a distance d apart, each split into |L>/|R> packets a distance
/// delta apart, all centers on the x axis.
struct ExperimentGeometry {
    double d = 450e-6;   ///< inter-particle separation, m
    double delta = 250e-6; ///< L/R split per particle, m
    double m1 = 1e-14;   ///< kg
    double m2 = 1e-14;   ///< kg

    void validate() const {
        if (!(m1 > 0.0)) throw validation_error("ExperimentGeometry: m1 > 0 violated");
        if (!(m2 > 0.0)) throw validation_error("ExperimentGeometry: m2 > 0 violated");
        if (!(delta > 0.0)) throw validation_error("ExperimentGeometry: delta > 0 violated");
        if (!(d > delta)) throw validation_error("ExperimentGeometry: d > delta violated");
    }
};

/// Signed x coordinates of the four packet centers.
struct BranchCenters {
    std::array<double, 2> x1; ///< particle 1, indexed by Branch
    std::array<double, 2> x2; ///< particle 2, indexed by Branch

    double particle1(Branch k) const noexcept { return x1[index_of(k)]; }
    double particle2(Branch l) const noexcept { return x2[index_of(l)]; }
};

/// X_1L = -d/2 - delta/2, X_1R = -d/2 + delta/2,
/// X_2L =  d/2 - delta/2, X_2R =  d/2 + delta/2.
BranchCenters branch_centers(const ExperimentGeometry& geom);

/// Center-to-center distances r_kl = |X_1k - X_2l| for the four packet pairs:
/// r_LL = r_RR = d, r_LR = d + delta, r_RL = d - delta.
struct PairSeparations {
    std::array<std::array<double, 2>, 2> r; ///< r[k][l]

    double operator()(Branch k, Branch l) const noexcept {
        return r[index_of(k)][index_of(l)];
    }
};

PairSeparations pair_separations(const ExperimentGeometry& geom);

} // namespace gielab
