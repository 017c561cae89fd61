#include "gielab/phase_table.hpp"

#include <algorithm>
#include <cmath>

namespace gielab {

double separable_consistency_residual(const PhaseTable& table) {
    if (!table.separable_parts) return 0.0;
    const SeparableParts& p = *table.separable_parts;
    double max_abs = 0.0;
    double max_res = 0.0;
    for (Branch k : branches) {
        for (Branch l : branches) {
            const double g = table(k, l);
            max_abs = std::max(max_abs, std::abs(g));
            max_res = std::max(max_res, std::abs(g - (p.phase1(k) + p.phase2(l))));
        }
    }
    if (max_abs == 0.0) return max_res;
    return max_res / max_abs;
}

} // namespace gielab
