#pragma once

#include <map>
#include <string>
#include <variant>

#include "darkstate/units.hpp"

namespace darkstate {

// Scalar value from a config file. Scenario knobs may be strings (e.g. a
// mode name); physical parameters must be numbers.
using ConfigValue = std::variant<double, bool, std::string>;

using OverrideMap = std::map<std::string, ConfigValue>;

struct ParsedConfig {
  PhysicalParams params = default_params();
  // scenario name -> overrides from its [scenario.NAME] section
  std::map<std::string, OverrideMap> scenario_overrides;
};

// Minimal TOML subset: [params] and [scenario.NAME] sections, key = value
// lines, '#' comments, numeric / boolean / quoted-string values. Unknown
// sections or keys raise std::runtime_error naming the offender, as does a
// key given in both natural and _si form.
ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config(const std::string& path);

// Inverse of the [params] section: parse_config_text(emit_config(p)).params
// reproduces p exactly.
std::string emit_config(const PhysicalParams& p);

// Applies physical-parameter overrides (natural or _si keys) from a
// scenario section on top of base; ignores keys that are scenario knobs
// rather than physical parameters.
PhysicalParams apply_param_overrides(const PhysicalParams& base,
                                     const OverrideMap& overrides);

bool is_physical_key(const std::string& key);

}  // namespace darkstate
