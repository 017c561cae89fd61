#include "config_file.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gielab/errors.hpp"
#include "output.hpp"

namespace gielab::tools {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::map<std::string, std::string> load_config_file(const std::string& path,
                                                    const std::set<std::string>& valid_keys) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file: " + path);

    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw validation_error("config " + path + ":" + std::to_string(lineno) +
                                   ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (!valid_keys.count(key)) {
            std::string list;
            for (const std::string& k : valid_keys) list += (list.empty() ? "" : ", ") + k;
            throw validation_error("config " + path + ": unknown key '" + key +
                                   "'; valid keys: " + list);
        }
        if (values.count(key))
            std::cerr << "warning: config " << path << ": duplicate key '" << key
                      << "', last value wins\n";
        values[key] = value;
    }
    return values;
}

std::vector<std::string> merge_config_args(const std::map<std::string, std::string>& config,
                                           const std::vector<std::string>& user_args) {
    std::vector<std::string> merged;
    for (const auto& [key, value] : config) {
        const std::string flag = "--" + key;
        bool overridden = false;
        for (const std::string& arg : user_args)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) overridden = true;
        if (!overridden) merged.push_back(flag + "=" + value);
    }
    merged.insert(merged.end(), user_args.begin(), user_args.end());
    return merged;
}

} // namespace gielab::tools
