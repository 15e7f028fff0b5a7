#pragma once

#include <string>
#include <vector>

#include "darkstate/config.hpp"
#include "darkstate/csv.hpp"

namespace darkstate {

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> columns;
  // Scenario-specific override keys accepted in [scenario.NAME] sections
  // (physical parameter keys are always accepted there too).
  std::vector<std::string> knob_keys;
  int default_points = 0;
};

const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo* find_scenario(const std::string& name);  // null if unknown

struct RunOptions {
  std::string out_dir = "out";  // empty: compute only, write nothing
  unsigned jobs = 1;            // 0: one per hardware thread
  int points = 0;               // 0: scenario default (or config knob)
  double tol = 0;               // ODE rtol; 0: 1e-10
};

struct SweepResult {
  std::string scenario;
  CsvTable table;
  std::string csv_path;  // empty when nothing was written
  std::string gp_path;
  double runtime_s = 0;
  double max_norm_drift = 0;  // worst drift over all integrations in the run
};

// Runs one registered scenario with overrides from cfg, writes
// <out_dir>/<name>.csv and a matching gnuplot script, and returns the table.
// Throws std::runtime_error for an unknown scenario name.
SweepResult run_scenario(const std::string& name, const ParsedConfig& cfg,
                         const RunOptions& opt);

}  // namespace darkstate
