#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace gielab::tools {

/// Output-path problems (unwritable directory, failed write).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

using ordered_json = nlohmann::ordered_json;

/// 12 significant digits, C locale, '.' decimal separator.
std::string format_number(double v);

/// Shorter fixed formatting for SVG coordinates.
std::string format_coord(double v);

/// Writes the whole file in one shot with LF line endings; throws io_error.
void write_text_file(const std::string& path, const std::string& content);

/// `# key=value` provenance preamble lines shared by the CSV outputs.
std::string csv_preamble(const ordered_json& parameters);

} // namespace gielab::tools
