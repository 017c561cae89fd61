#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gielab::tools {

/// Plain key=value configuration file: one pair per line, '#' comments,
/// blank lines ignored. Duplicate keys keep the last value (a warning goes to
/// the diagnostic stream); unknown keys are a validation failure whose message
/// lists the valid keys.
std::map<std::string, std::string> load_config_file(const std::string& path,
                                                    const std::set<std::string>& valid_keys);

/// Command-line argument vector with config-derived "--key=value" entries
/// injected ahead of the user's own flags, which therefore take precedence.
/// Keys already present among user_args are skipped.
std::vector<std::string> merge_config_args(const std::map<std::string, std::string>& config,
                                           const std::vector<std::string>& user_args);

} // namespace gielab::tools
