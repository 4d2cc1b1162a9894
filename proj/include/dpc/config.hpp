#pragma once

// Key-value configuration file handling. Flat sections [clock],
// [device], [ldo], [noise]; every field optional with the documented
// defaults; unknown sections or keys are rejected.

#include <string>
#include <vector>

#include "json.hpp"

#include "dpc/analog.hpp"
#include "dpc/core.hpp"

namespace dpc {

/// Fully resolved simulator configuration.
struct Config {
    ClockSpec clock;
    DeviceParams device;
    ComparatorModel comparator; // [device] comp_* keys
    LdoParams ldo;
    NoiseParams noise;
};

/// Parses config text. Lines: `key = value`, `[section]` headers, blank
/// lines, and `#` or `;` comments.
Config parse_config(const std::string& text);

/// Loads and parses a config file. Missing file is an IoError.
Config load_config(const std::string& path);

/// Applies one `section.key=value` override in place.
void apply_override(Config& config, const std::string& assignment);

/// Validates the resolved configuration (see control.hpp
/// validate_params) plus the noise and comparator fields.
void validate_config(const Config& config);

/// Resolved configuration as JSON, for run manifests.
nlohmann::json config_to_json(const Config& config);

/// All recognized `section.key` names, for help output.
std::vector<std::string> config_keys();

} // namespace dpc
