#include "gielab/geometry.hpp"

#include <cmath>

namespace gielab {

BranchCenters branch_centers(const ExperimentGeometry& geom) {
    geom.validate();
    BranchCenters c;
    c.x1[index_of(Branch::L)] = -geom.d / 2.0 - geom.delta / 2.0;
    c.x1[index_of(Branch::R)] = -geom.d / 2.0 + geom.delta / 2.0;
    c.x2[index_of(Branch::L)] = geom.d / 2.0 - geom.delta / 2.0;
    c.x2[index_of(Branch::R)] = geom.d / 2.0 + geom.delta / 2.0;
    return c;
}

PairSeparations pair_separations(const ExperimentGeometry& geom) {
    const BranchCenters c = branch_centers(geom);
    PairSeparations s;
    for (Branch k : branches)
        for (Branch l : branches)
            s.r[index_of(k)][index_of(l)] = std::abs(c.particle1(k) - c.particle2(l));
    return s;
}

} // namespace gielab
