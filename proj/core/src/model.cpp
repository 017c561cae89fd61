#include "gielab/model.hpp"

#include <cmath>

namespace gielab {

BranchPhaseFamily BranchPhaseFamily::nsb(const ExperimentGeometry& geom,
                                         const PhysicalConstants& consts) {
    geom.validate();
    consts.validate();
    const BranchCenters centers = branch_centers(geom);
    const double rate = consts.G * geom.m1 * geom.m2 / consts.hbar;
    BranchPhaseFamily family;
    family.rate1 = [centers, rate](Branch k, Branch, Branch n) {
        return rate / std::abs(centers.particle1(k) - centers.particle2(n));
    };
    family.rate2 = [centers, rate](Branch l, Branch m, Branch) {
        return rate / std::abs(centers.particle1(m) - centers.particle2(l));
    };
    return family;
}

BranchPhaseFamily BranchPhaseFamily::constant(double rate) {
    BranchPhaseFamily family;
    family.rate1 = [rate](Branch, Branch, Branch) { return rate; };
    family.rate2 = [rate](Branch, Branch, Branch) { return rate; };
    return family;
}

const char* model_name(const PotentialModel& model) {
    struct Visitor {
        const char* operator()(const NewtonModel&) const { return "newton"; }
        const char* operator()(const NsModel&) const { return "ns"; }
        const char* operator()(const NsbModel&) const { return "nsb"; }
        const char* operator()(const SeparableGenericModel&) const { return "separable-generic"; }
        const char* operator()(const DgDiagonalModel&) const { return "dg-diagonal"; }
    };
    return std::visit(Visitor{}, model);
}

} // namespace gielab
