#include "svg.hpp"

#include <algorithm>
#include <cmath>

#include "output.hpp"

namespace gielab::tools {

namespace {

constexpr double kWidth = 800.0, kHeight = 500.0;
constexpr double kLeft = 70.0, kRight = 780.0, kTop = 20.0, kBottom = 450.0;

std::string line(double x1, double y1, double x2, double y2, const std::string& style) {
    return "  <line x1=\"" + format_coord(x1) + "\" y1=\"" + format_coord(y1) + "\" x2=\"" +
           format_coord(x2) + "\" y2=\"" + format_coord(y2) + "\" " + style + "/>\n";
}

std::string text(double x, double y, const std::string& s, const std::string& extra = "") {
    return "  <text x=\"" + format_coord(x) + "\" y=\"" + format_coord(y) +
           "\" font-family=\"sans-serif\" font-size=\"13\" " + extra + ">" + s + "</text>\n";
}

} // namespace

std::string svg_witness_plot(const std::vector<SvgSeries>& series,
                             const std::string& metadata) {
    double t_min = 0.0, t_max = 1.0;
    double w_min = 0.0, w_max = 0.0;
    bool any = false;
    for (const SvgSeries& s : series) {
        for (size_t i = 0; i < s.t.size(); ++i) {
            if (!any) {
                t_min = t_max = s.t[i];
                w_min = w_max = s.w[i];
                any = true;
            }
            t_min = std::min(t_min, s.t[i]);
            t_max = std::max(t_max, s.t[i]);
            w_min = std::min(w_min, s.w[i]);
            w_max = std::max(w_max, s.w[i]);
        }
    }
    if (!any || t_max == t_min) t_max = t_min + 1.0;
    if (w_max == w_min) w_max = w_min + 1.0;
    const double pad = 0.05 * (w_max - w_min);
    w_min -= pad;
    w_max += pad;

    const auto sx = [&](double t) {
        return kLeft + (t - t_min) / (t_max - t_min) * (kRight - kLeft);
    };
    const auto sy = [&](double w) {
        return kBottom - (w - w_min) / (w_max - w_min) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           format_coord(kWidth) + " " + format_coord(kHeight) + "\">\n";
    svg += "  <desc>" + metadata + "</desc>\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += line(kLeft, kTop, kLeft, kBottom, "stroke=\"black\" stroke-width=\"1\"");
    svg += line(kLeft, kBottom, kRight, kBottom, "stroke=\"black\" stroke-width=\"1\"");
    for (int i = 0; i <= 5; ++i) {
        const double t = t_min + (t_max - t_min) * i / 5.0;
        const double x = sx(t);
        svg += line(x, kBottom, x, kBottom + 5, "stroke=\"black\" stroke-width=\"1\"");
        svg += text(x - 10, kBottom + 20, format_coord(t));
        const double w = w_min + (w_max - w_min) * i / 5.0;
        const double y = sy(w);
        svg += line(kLeft - 5, y, kLeft, y, "stroke=\"black\" stroke-width=\"1\"");
        svg += text(8, y + 4, format_coord(w));
    }
    svg += text(0.5 * (kLeft + kRight), kHeight - 12, "t (s)");
    svg += text(12, kTop - 4, "W");

    // zero line: witness negativity is the feature of interest
    if (w_min < 0.0 && w_max > 0.0)
        svg += line(kLeft, sy(0.0), kRight, sy(0.0),
                    "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    // decoherence-scale guide at t = 2 s
    if (t_min < 2.0 && 2.0 < t_max)
        svg += line(sx(2.0), kTop, sx(2.0), kBottom,
                    "stroke=\"#aaaaaa\" stroke-width=\"1\" stroke-dasharray=\"3,5\"");

    for (const SvgSeries& s : series) {
        svg += "  <polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.t.size(); ++i) {
            if (i) svg += " ";
            svg += format_coord(sx(s.t[i])) + "," + format_coord(sy(s.w[i]));
        }
        svg += "\"/>\n";
    }

    // legend, top right
    double ly = kTop + 12;
    for (const SvgSeries& s : series) {
        svg += line(kRight - 130, ly - 4, kRight - 100, ly - 4,
                    "stroke=\"" + s.color + "\" stroke-width=\"2\"");
        svg += text(kRight - 92, ly, s.label);
        ly += 18;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace gielab::tools
