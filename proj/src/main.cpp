#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "darkstate/acceptance.hpp"
#include "darkstate/config.hpp"
#include "darkstate/scenarios.hpp"

namespace {

std::string columns_help() {
  std::ostringstream s;
  s << "Scenario output columns:\n";
  for (const auto& sc : darkstate::scenario_registry()) {
    s << "  " << sc.name << ": ";
    for (std::size_t i = 0; i < sc.columns.size(); ++i)
      s << (i ? "," : "") << sc.columns[i];
    s << "\n";
  }
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dark-state survival of an atom crossing the nodes of a driven "
      "standing-wave cavity mode"};
  app.set_version_flag("--version", "darkstate 0.1.0");
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string scenario;
  unsigned jobs = 0;
  int points = 0;
  double tol = 0;

  CLI::App* run_cmd =
      app.add_subcommand("run", "run one scenario, write CSV + gnuplot files");
  run_cmd->add_option("scenario", scenario, "scenario name (see 'sim list')")
      ->required();
  run_cmd->add_option("--config", config_path, "TOML config file");
  run_cmd->add_option("--out", out_dir, "output directory")
      ->capture_default_str();
  run_cmd->add_option("--jobs", jobs, "worker threads, 0 = one per core");
  run_cmd->add_option("--points", points, "sweep point count override");
  run_cmd->add_option("--tol", tol, "ODE relative tolerance override");
  run_cmd->footer(columns_help());

  CLI::App* list_cmd = app.add_subcommand("list", "enumerate scenarios");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "run the physics acceptance suite, one line per criterion");
  check_cmd->add_option("--config", config_path, "TOML config file");
  check_cmd->add_option("--jobs", jobs, "worker threads, 0 = one per core");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list_cmd->parsed()) {
    for (const auto& sc : darkstate::scenario_registry()) {
      std::printf("%-22s %4d pts  %s\n", sc.name.c_str(), sc.default_points,
                  sc.summary.c_str());
    }
    return 0;
  }

  darkstate::ParsedConfig cfg;
  try {
    if (!config_path.empty()) cfg = darkstate::parse_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  if (check_cmd->parsed()) {
    try {
      const auto rep = darkstate::run_acceptance(cfg, jobs, &std::cout);
      return rep.all_pass ? 0 : 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (!darkstate::find_scenario(scenario)) {
    std::cerr << "unknown scenario '" << scenario << "' (see 'sim list')\n";
    return 2;
  }
  try {
    darkstate::RunOptions opt{out_dir, jobs, points, tol};
    const auto res = darkstate::run_scenario(scenario, cfg, opt);
    std::printf("wrote %s and %s (%zu rows, %.2f s)\n", res.csv_path.c_str(),
                res.gp_path.c_str(), res.table.row_count(), res.runtime_s);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
