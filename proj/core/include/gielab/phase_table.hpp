#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "gielab/geometry.hpp"

namespace gielab {

/// Per-particle phase pairs (gamma_{1,k}, gamma_{2,l}) of an additively
/// separable model. Present on a PhaseTable iff the generating model is
/// separable.
struct SeparableParts {
    std::array<double, 2> particle1; ///< gamma_{1,L}, gamma_{1,R}  (rad)
    std::array<double, 2> particle2; ///< gamma_{2,L}, gamma_{2,R}  (rad)

    double phase1(Branch k) const noexcept { return particle1[index_of(k)]; }
    double phase2(Branch l) const noexcept { return particle2[index_of(l)]; }
};

/// Accumulated phases gamma_kl(t) of the four packet pairs, radians.
struct PhaseTable {
    std::array<std::array<double, 2>, 2> gamma{}; ///< gamma[k][l]
    std::optional<SeparableParts> separable_parts;

    double operator()(Branch k, Branch l) const noexcept {
        return gamma[index_of(k)][index_of(l)];
    }

    /// Builds the full table from per-particle parts, so the separable
    /// consistency invariant holds exactly.
    static PhaseTable from_separable(const SeparableParts& parts) {
        PhaseTable table;
        table.separable_parts = parts;
        for (Branch k : branches)
            for (Branch l : branches)
                table.gamma[index_of(k)][index_of(l)] = parts.phase1(k) + parts.phase2(l);
        return table;
    }

    bool all_finite() const noexcept {
        for (const auto& row : gamma)
            for (double g : row)
                if (!std::isfinite(g)) return false;
        return true;
    }
};

/// Residual of gamma[k][l] = gamma_{1,k} + gamma_{2,l}, scaled by the largest
/// phase magnitude. Zero for tables built via from_separable; a nonzero value
/// bounds accumulation rounding when the table was assembled another way.
double separable_consistency_residual(const PhaseTable& table);

} // namespace gielab
