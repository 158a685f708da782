#ifndef AOICR_CONFIGFILE_HPP
#define AOICR_CONFIGFILE_HPP

#include "aoicr/config.hpp"

#include <istream>
#include <string>

namespace aoicr {

/// Assigns one named parameter. Throws std::invalid_argument for an
/// unrecognized name; range checks happen later in validate().
void set_config_field(SystemConfig& cfg, const std::string& key, double value);

double get_config_field(const SystemConfig& cfg, const std::string& key);

/// Flat `key = value` text, one assignment per line, `#` comments and
/// blank lines allowed. Errors carry the offending line number.
SystemConfig parse_config(std::istream& in, const std::string& origin);

SystemConfig load_config_file(const std::string& path);

} // namespace aoicr

#endif
