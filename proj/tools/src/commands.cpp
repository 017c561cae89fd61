#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "gielab/errors.hpp"
#include "gielab/pde/scenarios.hpp"
#include "gielab/phase_evolution.hpp"
#include "gielab/version.hpp"
#include "gielab/witness.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace gielab::tools {

namespace {

struct ModelSelection {
    bool newton = false;
    bool ns = false;
    bool nsb = false;
};

ModelSelection parse_models(const std::string& spec) {
    ModelSelection sel;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "N")
            sel.newton = true;
        else if (token == "NS")
            sel.ns = true;
        else if (token == "NSB")
            sel.nsb = true;
        else if (!token.empty())
            throw validation_error("unknown model '" + token + "'; expected subset of N,NS,NSB");
    }
    if (!sel.newton && !sel.ns && !sel.nsb)
        throw validation_error("at least one model required (subset of N,NS,NSB)");
    return sel;
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json" && format != "svg" && format != "all")
        throw validation_error("format must be one of csv|json|svg|all");
}

/// Indexed parallel map with deterministic result order.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

ordered_json constants_json(const PhysicalConstants& consts) {
    return ordered_json{{"G", consts.G}, {"hbar", consts.hbar}};
}

} // namespace

unsigned worker_count() {
    const char* env = std::getenv("GIE_LAB_THREADS");
    if (env) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

int run_witness(const WitnessArgs& args) {
    const ModelSelection sel = parse_models(args.models);
    check_format(args.format);
    if (args.samples < 1) throw validation_error("samples >= 1 violated");
    if (!(args.t_max >= 0.0)) throw validation_error("t-max >= 0 violated");

    const ExperimentGeometry geom{args.d, args.delta, args.m1, args.m2};
    const PhysicalConstants consts;
    geom.validate(); // invalid geometry -> exit 2 with the constraint named

    std::vector<double> ts;
    if (args.t_max == 0.0 || args.samples == 1) {
        ts.push_back(0.0);
    } else {
        ts.reserve(static_cast<size_t>(args.samples));
        for (int i = 0; i < args.samples; ++i)
            ts.push_back(args.t_max * i / (args.samples - 1));
    }

    std::vector<double> wn(ts.size()), wns(ts.size()), wnsb(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        if (sel.newton) wn[i] = witness_closed_newton(geom, consts, ts[i]);
        if (sel.ns) wns[i] = witness_closed_ns(geom, consts, ts[i]);
        if (sel.nsb) wnsb[i] = witness_closed_nsb(geom, consts, ts[i]);
    }

    ordered_json params{{"d", args.d},           {"delta", args.delta},
                        {"m1", args.m1},         {"m2", args.m2},
                        {"t_max", args.t_max},   {"samples", args.samples},
                        {"models", args.models}, {"out", args.out},
                        {"format", args.format}};

    const bool want_csv = args.format == "csv" || args.format == "all";
    const bool want_json = args.format == "json" || args.format == "all";
    const bool want_svg = args.format == "svg" || args.format == "all";

    if (want_csv) {
        std::string csv = csv_preamble(params);
        csv += "t";
        if (sel.newton) csv += ",W_N";
        if (sel.ns) csv += ",W_NS";
        if (sel.nsb) csv += ",W_NSB";
        csv += "\n";
        for (size_t i = 0; i < ts.size(); ++i) {
            csv += format_number(ts[i]);
            if (sel.newton) csv += "," + format_number(wn[i]);
            if (sel.ns) csv += "," + format_number(wns[i]);
            if (sel.nsb) csv += "," + format_number(wnsb[i]);
            csv += "\n";
        }
        write_text_file(args.out + ".csv", csv);
    }
    if (want_json) {
        ordered_json j{{"tool", "gie-lab"},
                       {"version", gielab::version},
                       {"command", "witness"},
                       {"parameters", params},
                       {"constants", constants_json(consts)}};
        write_text_file(args.out + ".json", j.dump(2) + "\n");
    }
    if (want_svg) {
        std::vector<SvgSeries> series;
        if (sel.newton) series.push_back({"W_N", "#d62728", ts, wn});
        if (sel.ns) series.push_back({"W_NS", "#1f77b4", ts, wns});
        if (sel.nsb) series.push_back({"W_NSB", "#2ca02c", ts, wnsb});
        const std::string meta = "gie-lab " + std::string(gielab::version) +
                                 " witness parameters " + params.dump();
        write_text_file(args.out + ".svg", svg_witness_plot(series, meta));
    }
    return 0;
}

namespace {

/// First t in (0, t_max] where W_N drops below -1e-9, refined by bisection.
/// W_N(0) = 0 with negative initial slope, so a bare sign test would
/// degenerate to t = 0; the tiny threshold pins the first detectable
/// excursion instead. NaN when the scan finds none.
double first_negative_crossing(const ExperimentGeometry& geom, const PhysicalConstants& consts,
                               double t_max) {
    constexpr int kScan = 4096;
    constexpr double kLevel = -1e-9;
    double prev_t = 0.0;
    for (int i = 1; i <= kScan; ++i) {
        const double t = t_max * i / kScan;
        if (witness_closed_newton(geom, consts, t) < kLevel) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (witness_closed_newton(geom, consts, mid) < kLevel)
                    hi = mid;
                else
                    lo = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_t = t;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace

int run_sweep(const SweepArgs& args) {
    if (args.var != "d" && args.var != "delta" && args.var != "m")
        throw validation_error("sweep variable must be one of d|delta|m");
    if (args.points < 1) throw validation_error("points >= 1 violated (zero-length sweep)");
    if (args.spacing != "linear" && args.spacing != "log")
        throw validation_error("spacing must be linear|log");
    if (args.objective != "wn-at-t" && args.objective != "wn-first-negative")
        throw validation_error("objective must be wn-at-t|wn-first-negative");
    if (!(args.from > 0.0) || !(args.to > 0.0))
        throw validation_error("sweep range must be positive");
    if (args.spacing == "log" && args.from <= 0.0)
        throw validation_error("log spacing requires a positive range");

    const PhysicalConstants consts;
    std::vector<double> values(static_cast<size_t>(args.points));
    for (int i = 0; i < args.points; ++i) {
        const double f = args.points == 1 ? 0.0 : static_cast<double>(i) / (args.points - 1);
        values[static_cast<size_t>(i)] =
            args.spacing == "log"
                ? args.from * std::pow(args.to / args.from, f)
                : args.from + (args.to - args.from) * f;
    }

    std::vector<std::string> objective(values.size());
    parallel_for(values.size(), [&](std::size_t i) {
        ExperimentGeometry geom{args.d, args.delta, args.m1, args.m2};
        if (args.var == "d")
            geom.d = values[i];
        else if (args.var == "delta")
            geom.delta = values[i];
        else
            geom.m1 = geom.m2 = values[i];
        try {
            geom.validate();
        } catch (const validation_error&) {
            objective[i] = "invalid";
            return;
        }
        const double result = args.objective == "wn-at-t"
                                  ? witness_closed_newton(geom, consts, args.t)
                                  : first_negative_crossing(geom, consts, args.t_max);
        objective[i] = std::isnan(result) ? "none" : format_number(result);
    });

    ordered_json params{{"var", args.var},       {"from", args.from},
                        {"to", args.to},         {"points", args.points},
                        {"spacing", args.spacing}, {"objective", args.objective},
                        {"t", args.t},           {"t_max", args.t_max},
                        {"d", args.d},           {"delta", args.delta},
                        {"m1", args.m1},         {"m2", args.m2},
                        {"out", args.out}};

    std::string csv = csv_preamble(params);
    csv += args.var + "," + args.objective + "\n";
    for (size_t i = 0; i < values.size(); ++i)
        csv += format_number(values[i]) + "," + objective[i] + "\n";
    write_text_file(args.out + ".csv", csv);

    ordered_json j{{"tool", "gie-lab"},
                   {"version", gielab::version},
                   {"command", "sweep"},
                   {"parameters", params},
                   {"constants", constants_json(consts)}};
    write_text_file(args.out + ".json", j.dump(2) + "\n");
    return 0;
}

int run_pde_verify(const PdeVerifyArgs& args) {
    pde::ScenarioOptions opts;
    opts.n = args.n;
    opts.dt = args.dt;
    opts.steps = args.steps;
    opts.g = args.g;
    opts.seed = args.seed;

    const pde::ScenarioReport report = pde::run_scenario(args.scenario, opts);

    ordered_json params{{"scenario", args.scenario}, {"n", args.n},   {"dt", args.dt},
                        {"steps", args.steps},       {"g", args.g},   {"seed", args.seed},
                        {"out", args.out}};

    std::string csv = csv_preamble(params);
    csv += "t,norm,entropy,X1,X2,energy\n";
    for (const auto& row : report.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            csv += (c ? "," : "") + format_number(row[c]);
        csv += "\n";
    }
    write_text_file(args.out + ".csv", csv);

    ordered_json metrics = ordered_json::object();
    for (const auto& [key, value] : report.metrics) metrics[key] = value;
    ordered_json j{{"tool", "gie-lab"},
                   {"version", gielab::version},
                   {"command", "pde-verify"},
                   {"scenario", report.scenario},
                   {"pass", report.pass},
                   {"metrics", metrics},
                   {"parameters", params}};
    write_text_file(args.out + ".json", j.dump(2) + "\n");

    return report.pass ? 0 : 1;
}

} // namespace gielab::tools
