#pragma once

#include <functional>
#include <utility>
#include <variant>

#include "gielab/constants.hpp"
#include "gielab/geometry.hpp"

namespace gielab {

/// Family of branch-conditioned separable phases: when the actual particle
/// configuration occupies branch pair (m, n), packet branch k of particle 1
/// accumulates phase rate1(k, m, n) * t and packet branch l of particle 2
/// accumulates rate2(l, m, n) * t (rates in rad/s, sign already folded in so
/// an attractive potential gives positive rates).
struct BranchPhaseFamily {
    std::function<double(Branch k, Branch m, Branch n)> rate1;
    std::function<double(Branch l, Branch m, Branch n)> rate2;

    /// Point-particle gravitational sourcing: particle 1's branch k sees the
    /// other particle at X_2n, particle 2's branch l sees it at X_1m.
    static BranchPhaseFamily nsb(const ExperimentGeometry& geom,
                                 const PhysicalConstants& consts);

    /// All phases equal (rate per branch constant); every state it generates
    /// is ψ0 up to a global phase.
    static BranchPhaseFamily constant(double rate);
};

struct NewtonModel {};
struct NsModel {};
struct NsbModel {
    Branch m = Branch::L; ///< branch occupied by particle 1's actual position
    Branch n = Branch::L; ///< branch occupied by particle 2's actual position
};
/// Additively separable model V(x1,x2) = V1(x1) + V2(x2) with caller-supplied
/// per-particle potentials (energy units; the qubit tier evaluates them at
/// the branch centers, the PDE tier samples them on the grid).
struct SeparableGenericModel {
    std::function<double(double x)> v1;
    std::function<double(double x)> v2;
};
struct DgDiagonalModel {
    BranchPhaseFamily family;
};

using PotentialModel =
    std::variant<NewtonModel, NsModel, NsbModel, SeparableGenericModel, DgDiagonalModel>;

const char* model_name(const PotentialModel& model);

} // namespace gielab
