#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "darkstate/acceptance.hpp"
#include "darkstate/csv.hpp"
#include "darkstate/diagnostics.hpp"
#include "darkstate/scenarios.hpp"
#include "doctest.h"

using namespace darkstate;

namespace {

SweepResult run(const std::string& name, const std::string& cfg_text = "",
                int points = 0, const std::string& out_dir = "") {
  RunOptions opt;
  opt.out_dir = out_dir;
  opt.points = points;
  return run_scenario(name, parse_config_text(cfg_text), opt);
}

std::vector<double> column(const CsvTable& t, const std::string& name) {
  const auto& cols = t.columns();
  const auto it = std::find(cols.begin(), cols.end(), name);
  REQUIRE(it != cols.end());
  const std::size_t ci = static_cast<std::size_t>(it - cols.begin());
  std::vector<double> out(t.row_count());
  for (std::size_t i = 0; i < t.row_count(); ++i) out[i] = t.row(i)[ci];
  return out;
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("registry") {
  const char* expected[] = {
      "fig3_energies",  "fig4_f",         "fig5_h",
      "fig6_constv",    "fig7_harmonic",  "fig8_ensemble",
      "fig9_angle30",   "fig10_angle60",  "appxA_detuning",
      "appxB_linearization", "appxC_smallterm", "threshold_report",
  };
  const auto& reg = scenario_registry();
  REQUIRE(reg.size() == 12);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].name == expected[i]);
    CHECK(!reg[i].summary.empty());
    CHECK(reg[i].columns.size() >= 2);
    CHECK(reg[i].default_points >= 2);
  }
  CHECK(find_scenario("fig6_constv") != nullptr);
  CHECK(find_scenario("fig11") == nullptr);
  CHECK_THROWS_AS(run("fig11"), std::runtime_error);
}

TEST_CASE("deterministic number formatting") {
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-1.5) == "-1.5");
  CHECK(format_double(1e-6) == "1e-06");
}

TEST_CASE("hashing") {
  CHECK(fnv1a("") == 14695981039346656037ull);
  CHECK(fnv1a("a") == 12638187200555641996ull);

  const PhysicalParams d = default_params();
  const std::string h = params_hash(d);
  CHECK(h.size() == 16);
  CHECK(h == params_hash(d));
  PhysicalParams q = d;
  q.g0 += 1e-9;
  CHECK(params_hash(q) != h);
}

TEST_CASE("csv table") {
  CsvTable t;
  t.set_columns({"a", "b"});
  t.add_row({1.0, 0.5});
  CHECK_THROWS_AS(t.add_row({1.0}), std::logic_error);
  t.add_meta("note", "x");
  CHECK(t.body() == "a,b\n1,0.5\n");
  CHECK(t.full_text() == "# note: x\na,b\n1,0.5\n");
}

TEST_CASE("pulse traces") {
  const SweepResult f = run("fig4_f", "", 201);
  CHECK(f.csv_path.empty());
  CHECK(f.table.columns() == find_scenario("fig4_f")->columns);
  REQUIRE(f.table.row_count() == 201);

  const auto ts = column(f.table, "t");
  const auto fs = column(f.table, "f");
  CHECK(ts.front() == 0.0);
  CHECK(ts.back() == doctest::Approx(20.0).epsilon(1e-14));
  const std::size_t imax =
      std::max_element(fs.begin(), fs.end()) - fs.begin();
  CHECK(fs[imax] > 0.030);
  CHECK(fs[imax] < 0.035);
  // Even around the pulse center.
  for (std::size_t i = 0; i < fs.size(); ++i)
    CHECK(fs[i] == doctest::Approx(fs[fs.size() - 1 - i]).epsilon(1e-10));

  const SweepResult h = run("fig5_h", "", 201);
  const auto hs = column(h.table, "h");
  const std::size_t hmax =
      std::max_element(hs.begin(), hs.end()) - hs.begin();
  const double t_peak = column(h.table, "t")[hmax];
  CHECK(t_peak > 2.7);
  CHECK(t_peak < 3.9);
  for (double v : hs) CHECK(v >= 0.0);
}

TEST_CASE("dressed energy sweep") {
  const SweepResult r = run("fig3_energies", "", 101);
  const auto zs = column(r.table, "z");
  const auto ts = column(r.table, "t");
  const auto e0 = column(r.table, "e0");
  const auto ep = column(r.table, "e_plus");
  const auto em = column(r.table, "e_minus");
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(zs[i] == 0.14 * ts[i]);
    CHECK(e0[i] == 0.0);
    CHECK(ep[i] == -em[i]);
  }
}

TEST_CASE("identical inputs give identical bodies") {
  const std::string cfg =
      "[scenario.fig6_constv]\nv_min = 0.002\nv_max = 0.01\npoints = 12\n";
  const SweepResult a = run("fig6_constv", cfg);
  const SweepResult b = run("fig6_constv", cfg);
  CHECK(a.table.body() == b.table.body());
  REQUIRE(a.table.row_count() == 12);
  // Below the first-node speed: certain survival for every sample.
  for (double p : column(a.table, "p_lz")) CHECK(p == 1.0);
  for (double p : column(a.table, "p_ode")) CHECK(p > 0.999);
  for (double n : column(a.table, "node_count")) CHECK(n == 0.0);
  CHECK(a.max_norm_drift < 1e-8);
}

TEST_CASE("output files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "darkstate_scen_test";
  fs::remove_all(dir);
  const SweepResult r = run("fig4_f", "", 51, dir.string());
  REQUIRE(!r.csv_path.empty());
  REQUIRE(!r.gp_path.empty());
  CHECK(fs::exists(r.csv_path));
  CHECK(fs::exists(r.gp_path));

  std::ifstream in(r.csv_path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "# scenario: fig4_f");
  std::string rest((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(rest.find("# params_hash: ") != std::string::npos);
  CHECK(rest.find("# timestamp: ") != std::string::npos);
  CHECK(rest.find("t,alpha,f\n") != std::string::npos);

  std::ifstream gp(r.gp_path);
  std::string gp_text((std::istreambuf_iterator<char>(gp)),
                      std::istreambuf_iterator<char>());
  CHECK(gp_text.find("fig4_f.csv") != std::string::npos);
  CHECK(gp_text.find("set terminal pngcairo") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("points precedence") {
  const std::string cfg = "[scenario.appxB_linearization]\npoints = 12\n";
  CHECK(run("appxB_linearization", cfg, 7).table.row_count() == 7);
  CHECK(run("appxB_linearization", cfg).table.row_count() == 12);
  CHECK(run("appxB_linearization").table.row_count() == 95);
}

TEST_CASE("linearization sweep grows monotonically") {
  const SweepResult r = run("appxB_linearization");
  const auto errs = column(r.table, "rel_error");
  const auto bounds = column(r.table, "bound");
  CHECK(bounds.front() == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(bounds.back() == doctest::Approx(0.95).epsilon(1e-14));
  for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] > errs[i - 1]);
  CHECK(errs.front() == doctest::Approx(1e-4 / 6.0).epsilon(1e-3));
}

TEST_CASE("threshold report semantics") {
  const std::string cfg =
      "[scenario.threshold_report]\nv_min = 0.01\nv_max = 0.06\n";
  const SweepResult r = run("threshold_report", cfg, 26);
  const auto vs = column(r.table, "v");
  const auto counts = column(r.table, "node_count");
  const auto worst = column(r.table, "worst_exponent");
  const auto total = column(r.table, "total_exponent");
  const auto pass = column(r.table, "pass");
  const auto fast = column(r.table, "above_speed_threshold");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    CHECK(counts[i] == std::floor(counts[i]));
    CHECK((pass[i] == 0.0 || pass[i] == 1.0));
    CHECK(fast[i] == ((vs[i] >= speed_threshold) ? 1.0 : 0.0));
    CHECK(worst[i] <= total[i] + 1e-15);
    if (counts[i] == 0.0) CHECK(pass[i] == 1.0);
    if (counts[i] > 1.0) CHECK(pass[i] == 0.0);
  }
  CHECK(counts.front() == 0.0);   // v = 0.01 never reaches a node
  CHECK(counts.back() == 2.0);    // v = 0.06 crosses two nodes
  CHECK(pass.back() == 0.0);
}

TEST_CASE("ensemble scenario table layout") {
  const std::string cfg =
      "[scenario.fig8_ensemble]\nv0_min = 0\nv0_max = 0.01\n";
  const SweepResult r = run("fig8_ensemble", cfg, 3);
  REQUIRE(r.table.row_count() == 9);
  const auto z0 = column(r.table, "z0");
  const auto pa = column(r.table, "p_analytic");
  const auto pn = column(r.table, "p_numeric");
  for (std::size_t i = 0; i < 9; ++i) {
    const double expect_z0 =
        (i < 3) ? 0.25 : (i < 6) ? 1.0 / 3.0 : 5.0 / 12.0;
    CHECK(z0[i] == expect_z0);
    CHECK(pa[i] >= 0.0);
    CHECK(pa[i] <= 1.0 + 1e-12);
    CHECK(std::isnan(pn[i]));  // analytic is the default mode
  }
  CHECK_THROWS_AS(
      run("fig8_ensemble", "[scenario.fig8_ensemble]\nmode = \"bogus\"\n", 3),
      std::runtime_error);
}

TEST_CASE("valley finder") {
  const std::vector<double> y = {1.0, 0.2, 0.9, 0.6, 1.0};
  CHECK(prominent_minima(y, 0.5) == std::vector<std::size_t>{1});
  CHECK(prominent_minima(y, 0.25) == std::vector<std::size_t>{1, 3});
  CHECK(prominent_minima(y, 0.85).empty());

  CHECK(prominent_minima({1.0, 0.9, 0.8, 0.7}, 0.01).empty());
  CHECK(prominent_minima({1.0, 0.5, 0.5, 1.0}, 0.1).empty());
  CHECK(prominent_minima({}, 0.1).empty());
  CHECK(prominent_minima({1.0, 0.0, 1.0}, 0.99) ==
        std::vector<std::size_t>{1});
}

}  // TEST_SUITE
