#include "darkstate/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "darkstate/scenarios.hpp"

namespace darkstate {
namespace {

struct FieldDef {
  const char* key;
  double PhysicalParams::* field;
  std::optional<Kind> kind;  // unset => dimensionless or inherently SI
  bool si_only;
};

const std::vector<FieldDef>& field_defs() {
  static const std::vector<FieldDef> defs = {
      {"g0", &PhysicalParams::g0, Kind::frequency, false},
      {"r0", &PhysicalParams::r0, std::nullopt, false},
      {"alpha0", &PhysicalParams::alpha0, std::nullopt, false},
      {"T0", &PhysicalParams::T0, Kind::time, false},
      {"tW", &PhysicalParams::tW, Kind::time, false},
      {"delta", &PhysicalParams::delta, Kind::frequency, false},
      {"waist0", &PhysicalParams::waist0, Kind::length, false},
      {"lambda_si", &PhysicalParams::lambda_si, std::nullopt, true},
      {"gamma_si", &PhysicalParams::gamma_si, std::nullopt, true},
      {"mass_si", &PhysicalParams::mass_si, std::nullopt, true},
  };
  return defs;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Strips a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"') in_str = !in_str;
    if (c == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

ConfigValue parse_value(const std::string& raw, int lineno) {
  if (raw.empty())
    throw std::runtime_error("config line " + std::to_string(lineno) +
                             ": missing value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"')
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unterminated string");
    return raw.substr(1, raw.size() - 2);
  }
  if (raw == "true") return true;
  if (raw == "false") return false;
  char* end = nullptr;
  double x = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0')
    throw std::runtime_error("config line " + std::to_string(lineno) +
                             ": cannot parse value '" + raw + "'");
  return x;
}

double require_number(const ConfigValue& v, const std::string& key) {
  if (const double* x = std::get_if<double>(&v)) return *x;
  throw std::runtime_error("config key '" + key + "' must be a number");
}

// Splits "name" or "name_si"; returns the field definition and whether the
// _si form was used. Null when the key is not a physical parameter.
const FieldDef* lookup_physical(const std::string& key, bool* via_si) {
  for (const auto& d : field_defs()) {
    if (key == d.key) {
      *via_si = false;
      return &d;
    }
  }
  const std::string suffix = "_si";
  if (key.size() > suffix.size() &&
      key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
    std::string base = key.substr(0, key.size() - suffix.size());
    for (const auto& d : field_defs()) {
      if (base == d.key && !d.si_only && d.kind.has_value()) {
        *via_si = true;
        return &d;
      }
    }
  }
  return nullptr;
}

void apply_physical(PhysicalParams* p, const OverrideMap& kv,
                    bool reject_unknown) {
  // Conversion factors first, so _si keys in the same section see them.
  for (const auto& [key, val] : kv) {
    bool via_si = false;
    const FieldDef* d = lookup_physical(key, &via_si);
    if (!d || via_si || !d->si_only) continue;
    p->*(d->field) = require_number(val, key);
  }
  // Conflict scan: a parameter set both directly and via _si is ambiguous.
  for (const auto& d : field_defs()) {
    if (d.si_only || !d.kind.has_value()) continue;
    std::string si_key = std::string(d.key) + "_si";
    if (kv.count(d.key) && kv.count(si_key))
      throw std::runtime_error("config keys '" + std::string(d.key) +
                               "' and '" + si_key + "' conflict");
  }
  for (const auto& [key, val] : kv) {
    bool via_si = false;
    const FieldDef* d = lookup_physical(key, &via_si);
    if (!d) {
      if (reject_unknown)
        throw std::runtime_error("unknown config key '" + key + "'");
      continue;
    }
    if (d->si_only) continue;  // handled above
    double x = require_number(val, key);
    p->*(d->field) = via_si ? to_natural(x, *d->kind, *p) : x;
  }
}

}  // namespace

bool is_physical_key(const std::string& key) {
  bool via_si = false;
  return lookup_physical(key, &via_si) != nullptr;
}

PhysicalParams apply_param_overrides(const PhysicalParams& base,
                                     const OverrideMap& overrides) {
  PhysicalParams p = base;
  apply_physical(&p, overrides, /*reject_unknown=*/false);
  return p;
}

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig cfg;
  OverrideMap params_kv;
  std::istringstream in(text);
  std::string line;
  std::string section;  // "", "params", or scenario name
  bool in_params = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": malformed section header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "params") {
        in_params = true;
        section.clear();
      } else if (name.rfind("scenario.", 0) == 0) {
        section = name.substr(9);
        in_params = false;
        if (!find_scenario(section))
          throw std::runtime_error("unknown scenario '" + section +
                                   "' in config");
        cfg.scenario_overrides[section];  // record even if empty
      } else {
        throw std::runtime_error("unknown config section '" + name + "'");
      }
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string raw = trim(line.substr(eq + 1));
    if (!valid_key(key))
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": bad key '" + key + "'");
    ConfigValue val = parse_value(raw, lineno);
    if (in_params) {
      if (!params_kv.emplace(key, val).second)
        throw std::runtime_error("duplicate config key '" + key + "'");
    } else if (!section.empty()) {
      const ScenarioInfo* info = find_scenario(section);
      bool knob = false;
      for (const auto& k : info->knob_keys)
        if (k == key) knob = true;
      if (!knob && !is_physical_key(key))
        throw std::runtime_error("unknown config key '" + key +
                                 "' in [scenario." + section + "]");
      if (!cfg.scenario_overrides[section].emplace(key, val).second)
        throw std::runtime_error("duplicate config key '" + key + "'");
    } else {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": key outside any section");
    }
  }
  apply_physical(&cfg.params, params_kv, /*reject_unknown=*/true);
  validate(cfg.params);
  return cfg;
}

ParsedConfig parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string emit_config(const PhysicalParams& p) {
  char buf[64];
  std::ostringstream out;
  out << "[params]\n";
  for (const auto& d : field_defs()) {
    std::snprintf(buf, sizeof(buf), "%.17g", p.*(d.field));
    out << d.key << " = " << buf << "\n";
  }
  return out.str();
}

}  // namespace darkstate
