#include "output.hpp"

#include <cstdio>
#include <fstream>

#include "gielab/version.hpp"

namespace gielab::tools {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open output path: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

std::string csv_preamble(const ordered_json& parameters) {
    std::string s = "# gie-lab ";
    s += gielab::version;
    s += "\n# parameters ";
    s += parameters.dump();
    s += "\n";
    return s;
}

} // namespace gielab::tools
