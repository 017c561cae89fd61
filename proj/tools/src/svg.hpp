#pragma once

#include <string>
#include <vector>

namespace gielab::tools {

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<double> t;
    std::vector<double> w;
};

/// Static 800x500 polyline plot: axes with ticks, a dashed zero line, a
/// vertical guide at t = 2 s (when inside the range), and a legend.
std::string svg_witness_plot(const std::vector<SvgSeries>& series,
                             const std::string& metadata);

} // namespace gielab::tools
