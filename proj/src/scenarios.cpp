#include "darkstate/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "darkstate/diagnostics.hpp"
#include "darkstate/dressed.hpp"
#include "darkstate/dynamics.hpp"
#include "darkstate/ensemble.hpp"
#include "darkstate/landau_zener.hpp"
#include "darkstate/sweep.hpp"

#ifndef DARKSTATE_GIT_REV
#define DARKSTATE_GIT_REV "unknown"
#endif

namespace darkstate {
namespace {

// Trap frequency reproducing the deeper harmonic-trap valleys:
// 1.32e6 rad/s expressed in units of gamma = 1/30.70 ns.
constexpr double kDefaultTrapOmega = 1.32e6 * 30.70e-9;

const std::vector<ScenarioInfo>& registry_impl() {
  static const std::vector<ScenarioInfo> reg = {
      {"fig3_energies",
       "dressed energies E0, E+- along a constant-velocity pass",
       {"t", "z", "e_minus", "e0", "e_plus"},
       {"v", "z0", "points"},
       2001},
      {"fig4_f",
       "adiabaticity numerator f(t) for the Gaussian pulse",
       {"t", "alpha", "f"},
       {"points"},
       2001},
      {"fig5_h",
       "crossing strength h(t) for the Gaussian pulse",
       {"t", "alpha", "h"},
       {"points"},
       2001},
      {"fig6_constv",
       "survival P(v), constant axial velocity",
       {"v", "p_ode", "p_lz", "node_count", "tangential", "norm_drift"},
       {"z0", "v_min", "v_max", "points"},
       200},
      {"fig7_harmonic",
       "survival P(v), harmonic axial oscillation from the trap center",
       {"v", "p_ode", "p_lz", "node_count", "tangential", "norm_drift"},
       {"z0", "omega_t", "v_min", "v_max", "points"},
       200},
      {"fig8_ensemble",
       "ensemble-averaged survival over a truncated Gaussian speed spread",
       {"z0", "v0", "p_analytic", "p_numeric"},
       {"dv", "v0_min", "v0_max", "mode", "points"},
       107},
      {"fig9_angle30",
       "survival P(v) for straight-line motion at 30 deg to the axis",
       {"v", "p_ode", "p_1d_equiv", "p_lz", "node_count", "tangential",
        "norm_drift"},
       {"z0", "rho0", "v_min", "v_max", "points"},
       61},
      {"fig10_angle60",
       "survival P(v) for straight-line motion at 60 deg to the axis",
       {"v", "p_ode", "p_1d_equiv", "p_lz", "node_count", "tangential",
        "norm_drift"},
       {"z0", "rho0", "v_min", "v_max", "points"},
       61},
      {"appxA_detuning",
       "survival vs two-photon detuning at fixed velocity",
       {"delta", "p_dark", "p_resonant", "abs_diff"},
       {"v", "z0", "delta_max", "points"},
       21},
      {"appxB_linearization",
       "relative error of the linear node approximation vs slope bound",
       {"bound", "rel_error"},
       {"bound_min", "bound_max", "points"},
       95},
      {"appxC_smallterm",
       "neglected-term amplitude S(x) near a crossing",
       {"x", "s_closed", "s_quad"},
       {"v", "points"},
       2001},
      {"threshold_report",
       "per-velocity adiabaticity exponents and pass/fail flags",
       {"v", "node_count", "worst_exponent", "total_exponent", "pass",
        "above_speed_threshold"},
       {"z0", "v_min", "v_max", "points"},
       120},
  };
  return reg;
}

double knob_num(const OverrideMap& o, const std::string& key, double dflt) {
  auto it = o.find(key);
  if (it == o.end()) return dflt;
  if (const double* x = std::get_if<double>(&it->second)) return *x;
  throw std::runtime_error("scenario knob '" + key + "' must be a number");
}

std::string knob_str(const OverrideMap& o, const std::string& key,
                     const std::string& dflt) {
  auto it = o.find(key);
  if (it == o.end()) return dflt;
  if (const std::string* s = std::get_if<std::string>(&it->second)) return *s;
  throw std::runtime_error("scenario knob '" + key + "' must be a string");
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::runtime_error("need at least 2 sweep points");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

struct Ctx {
  PhysicalParams p;
  PulseShape pulse;
  OverrideMap knobs;
  int points = 0;
  double rtol = 1e-10;
  double atol = 1e-12;
  unsigned jobs = 1;
  double max_drift = 0;  // filled by the builders
  std::vector<std::pair<std::string, std::string>> used_knobs;

  double knob(const std::string& key, double dflt) {
    double v = knob_num(knobs, key, dflt);
    used_knobs.emplace_back(key, format_double(v));
    return v;
  }
  std::string knob_s(const std::string& key, const std::string& dflt) {
    std::string v = knob_str(knobs, key, dflt);
    used_knobs.emplace_back(key, v);
    return v;
  }
};

CsvTable build_fig3(Ctx& c) {
  const double v = c.knob("v", 0.14);
  const double z0 = c.knob("z0", 0.0);
  CsvTable t;
  t.set_columns(find_scenario("fig3_energies")->columns);
  for (double ti : linspace(0.0, 2.0 * c.pulse.T0, c.points)) {
    const double z = z0 + v * ti;
    const auto sp =
        dressed_energies(chi_1d(z), alpha(ti, c.pulse), c.p);
    t.add_row({ti, z, sp.e_minus, sp.e0, sp.e_plus});
  }
  return t;
}

CsvTable build_pulse_trace(Ctx& c, bool want_h) {
  CsvTable t;
  t.set_columns(find_scenario(want_h ? "fig5_h" : "fig4_f")->columns);
  for (double ti : linspace(0.0, 2.0 * c.pulse.T0, c.points)) {
    const double val = want_h ? lz_h(ti, c.pulse)
                              : adiabaticity_f(ti, c.pulse, c.p.g0);
    t.add_row({ti, alpha(ti, c.pulse), val});
  }
  return t;
}

CsvTable build_velocity_sweep(Ctx& c, const std::string& name) {
  const double z0 = c.knob("z0", 0.25);
  double omega_t = 0, theta = 0, rho0 = 0;
  if (name == "fig7_harmonic") omega_t = c.knob("omega_t", kDefaultTrapOmega);
  if (name == "fig9_angle30") theta = two_pi / 12.0;
  if (name == "fig10_angle60") theta = two_pi / 6.0;
  const bool line = theta != 0;
  if (line) rho0 = c.knob("rho0", 0.0);
  const double v_min = c.knob("v_min", 0.001);
  const double v_max = c.knob("v_max", 0.06);
  const auto vs = linspace(v_min, v_max, c.points);
  const double t1 = 2.0 * c.pulse.T0;

  std::vector<std::vector<double>> rows(vs.size());
  std::vector<double> drifts(vs.size(), 0.0);
  parallel_for(vs.size(), c.jobs, [&](std::size_t i) {
    const double v = vs[i];
    Trajectory traj =
        name == "fig7_harmonic" ? Trajectory::harmonic(v, z0, omega_t)
        : line                  ? Trajectory::line(v, z0, theta, rho0)
                                : Trajectory::constant(v, z0);
    const auto rep = integrate(traj, c.pulse, c.p, 0.0, t1, c.rtol, c.atol);
    const auto lz = predict(traj, c.pulse, c.p, 0.0, t1);
    double drift = rep.max_norm_drift;
    if (line) {
      const auto ref = integrate(Trajectory::constant(v * std::cos(theta), z0),
                                 c.pulse, c.p, 0.0, t1, c.rtol, c.atol);
      drift = std::max(drift, ref.max_norm_drift);
      rows[i] = {v,
                 rep.p_dark,
                 ref.p_dark,
                 lz.p_total,
                 static_cast<double>(lz.per_node.size()),
                 lz.tangential_flag ? 1.0 : 0.0,
                 drift};
    } else {
      rows[i] = {v,
                 rep.p_dark,
                 lz.p_total,
                 static_cast<double>(lz.per_node.size()),
                 lz.tangential_flag ? 1.0 : 0.0,
                 drift};
    }
    drifts[i] = drift;
  });

  CsvTable t;
  t.set_columns(find_scenario(name)->columns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.add_row(rows[i]);
    c.max_drift = std::max(c.max_drift, drifts[i]);
  }
  return t;
}

CsvTable build_fig8(Ctx& c) {
  const double dv = c.knob("dv", 1.2e-3);
  const double v0_min = c.knob("v0_min", 0.0);
  const double v0_max = c.knob("v0_max", 0.053);
  const std::string mode = c.knob_s("mode", "analytic");
  if (mode != "analytic" && mode != "numeric" && mode != "both")
    throw std::runtime_error("fig8 mode must be analytic, numeric or both");
  const bool want_a = mode != "numeric";
  const bool want_n = mode != "analytic";
  const std::vector<double> z0s = {0.25, 1.0 / 3.0, 5.0 / 12.0};
  const auto v0s = linspace(v0_min, v0_max, c.points);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<SurvivalTable> tables(z0s.size());
  if (want_n) {
    const double lo = std::max(0.0, v0_min - 8.0 * dv);
    const double hi = v0_max + 8.0 * dv;
    for (std::size_t zi = 0; zi < z0s.size(); ++zi)
      tables[zi] = SurvivalTable::build(z0s[zi], c.pulse, c.p, lo, hi, 1e-3,
                                        c.rtol, c.jobs);
  }

  std::vector<std::vector<double>> rows(z0s.size() * v0s.size());
  parallel_for(rows.size(), c.jobs, [&](std::size_t idx) {
    const std::size_t zi = idx / v0s.size();
    const std::size_t vi = idx % v0s.size();
    VelocityDistribution dist{v0s[vi], dv};
    double pa = nan, pn = nan;
    if (want_a)
      pa = ensemble_survival(dist, c.pulse, c.p, z0s[zi],
                             SurvivalMode::analytic);
    if (want_n)
      pn = ensemble_survival(dist, c.pulse, c.p, z0s[zi],
                             SurvivalMode::numeric, &tables[zi]);
    rows[idx] = {z0s[zi], v0s[vi], pa, pn};
  });

  CsvTable t;
  t.set_columns(find_scenario("fig8_ensemble")->columns);
  for (const auto& r : rows) t.add_row(r);
  return t;
}

CsvTable build_appxA(Ctx& c) {
  const double v = c.knob("v", 0.02);
  const double z0 = c.knob("z0", 0.25);
  const double delta_max = c.knob("delta_max", c.p.g0);
  const auto deltas = linspace(0.0, delta_max, c.points);
  const double t1 = 2.0 * c.pulse.T0;
  const Trajectory traj = Trajectory::constant(v, z0);

  PhysicalParams p0 = c.p;
  p0.delta = 0;
  const auto ref = integrate(traj, c.pulse, p0, 0.0, t1, c.rtol, c.atol);
  c.max_drift = std::max(c.max_drift, ref.max_norm_drift);

  std::vector<std::vector<double>> rows(deltas.size());
  std::vector<double> drifts(deltas.size(), 0.0);
  parallel_for(deltas.size(), c.jobs, [&](std::size_t i) {
    PhysicalParams pd = c.p;
    pd.delta = deltas[i];
    const auto rep = integrate(traj, c.pulse, pd, 0.0, t1, c.rtol, c.atol);
    rows[i] = {deltas[i], rep.p_dark, ref.p_dark,
               std::abs(rep.p_dark - ref.p_dark)};
    drifts[i] = rep.max_norm_drift;
  });

  CsvTable t;
  t.set_columns(find_scenario("appxA_detuning")->columns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.add_row(rows[i]);
    c.max_drift = std::max(c.max_drift, drifts[i]);
  }
  return t;
}

CsvTable build_appxB(Ctx& c) {
  const double lo = c.knob("bound_min", 0.01);
  const double hi = c.knob("bound_max", 0.95);
  CsvTable t;
  t.set_columns(find_scenario("appxB_linearization")->columns);
  for (double b : linspace(lo, hi, c.points))
    t.add_row({b, linearization_error(b)});
  return t;
}

CsvTable build_appxC(Ctx& c) {
  const double v = c.knob("v", 0.012);
  const double a = small_term_a(v, c.p);
  CsvTable t;
  t.set_columns(find_scenario("appxC_smallterm")->columns);
  const auto xs = linspace(-a, a, c.points);
  std::vector<std::vector<double>> rows(xs.size());
  parallel_for(xs.size(), c.jobs, [&](std::size_t i) {
    rows[i] = {xs[i], small_term_S(xs[i], v, c.p),
               small_term_S_quad(xs[i], v, c.p)};
  });
  for (const auto& r : rows) t.add_row(r);
  return t;
}

CsvTable build_threshold(Ctx& c) {
  const double z0 = c.knob("z0", 0.25);
  const double v_min = c.knob("v_min", 0.001);
  const double v_max = c.knob("v_max", 0.06);
  CsvTable t;
  t.set_columns(find_scenario("threshold_report")->columns);
  for (double v : linspace(v_min, v_max, c.points)) {
    const auto rep =
        adiabatic_threshold_check(Trajectory::constant(v, z0), c.pulse, c.p);
    t.add_row({v, static_cast<double>(rep.node_count), rep.worst_exponent,
               rep.total_exponent, rep.pass ? 1.0 : 0.0,
               v >= speed_threshold ? 1.0 : 0.0});
  }
  return t;
}

std::string gp_script(const std::string& name, const std::string& csv) {
  std::ostringstream s;
  s << "# gnuplot script for " << name << "\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set terminal pngcairo size 960,640\n"
    << "set output '" << name << ".png'\n"
    << "set grid\n";
  auto q = [&](int a, int b, const char* w) {
    std::ostringstream c2;
    c2 << "'" << csv << "' using " << a << ":" << b << " with " << w;
    return c2.str();
  };
  if (name == "fig3_energies") {
    s << "set xlabel 't [1/gamma]'\nset ylabel 'E [gamma]'\n"
      << "plot " << q(1, 3, "lines") << ", '' using 1:4 with lines, "
      << "'' using 1:5 with lines\n";
  } else if (name == "fig4_f" || name == "fig5_h") {
    s << "set xlabel 't [1/gamma]'\n"
      << "plot " << q(1, 3, "lines") << "\n";
  } else if (name == "fig6_constv" || name == "fig7_harmonic") {
    s << "set xlabel 'v [lambda gamma]'\nset ylabel 'P'\nset yrange [0:1.05]\n"
      << "plot " << q(1, 2, "points pt 7 ps 0.4") << ", "
      << q(1, 3, "lines") << "\n";
  } else if (name == "fig8_ensemble") {
    s << "set xlabel 'v0 [lambda gamma]'\nset ylabel 'P'\nset yrange [0:1.05]"
      << "\nplot ";
    const double z0s[3] = {0.25, 1.0 / 3.0, 5.0 / 12.0};
    for (int i = 0; i < 3; ++i) {
      std::string z = format_double(z0s[i]);
      s << (i ? ", " : "") << "'" << csv << "' using 2:($1==" << z
        << "?$3:1/0) with lines title 'z0=" << z << "'";
    }
    s << "\n";
  } else if (name == "fig9_angle30" || name == "fig10_angle60") {
    s << "set xlabel 'v [lambda gamma]'\nset ylabel 'P'\nset yrange [0:1.05]\n"
      << "plot " << q(1, 2, "points pt 7 ps 0.4") << ", "
      << q(1, 3, "lines") << ", " << q(1, 4, "lines dt 2") << "\n";
  } else if (name == "appxA_detuning") {
    s << "set xlabel 'delta [gamma]'\nset ylabel 'P'\n"
      << "plot " << q(1, 2, "linespoints") << ", " << q(1, 3, "lines dt 2")
      << "\n";
  } else if (name == "appxB_linearization") {
    s << "set xlabel 'bound'\nset ylabel 'relative error'\n"
      << "plot " << q(1, 2, "lines") << "\n";
  } else if (name == "appxC_smallterm") {
    s << "set xlabel 'x'\nset ylabel 'S'\n"
      << "plot " << q(1, 2, "lines") << "\n";
  } else {
    s << "set xlabel 'v [lambda gamma]'\nset ylabel 'exponent'\n"
      << "plot " << q(1, 3, "lines") << ", " << q(1, 4, "lines dt 2") << "\n";
  }
  return s.str();
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() { return registry_impl(); }

const ScenarioInfo* find_scenario(const std::string& name) {
  for (const auto& s : registry_impl())
    if (s.name == name) return &s;
  return nullptr;
}

SweepResult run_scenario(const std::string& name, const ParsedConfig& cfg,
                         const RunOptions& opt) {
  const ScenarioInfo* info = find_scenario(name);
  if (!info) throw std::runtime_error("unknown scenario '" + name + "'");

  Ctx c;
  auto it = cfg.scenario_overrides.find(name);
  if (it != cfg.scenario_overrides.end()) c.knobs = it->second;
  c.p = apply_param_overrides(cfg.params, c.knobs);
  validate(c.p);
  c.pulse = PulseShape::from_params(c.p);
  c.points = opt.points > 0
                 ? opt.points
                 : static_cast<int>(
                       knob_num(c.knobs, "points", info->default_points));
  c.rtol = opt.tol > 0 ? opt.tol : 1e-10;
  c.atol = c.rtol * 1e-2;
  c.jobs = resolve_jobs(opt.jobs);

  const auto t_begin = std::chrono::steady_clock::now();
  CsvTable table;
  if (name == "fig3_energies") table = build_fig3(c);
  else if (name == "fig4_f") table = build_pulse_trace(c, false);
  else if (name == "fig5_h") table = build_pulse_trace(c, true);
  else if (name == "fig8_ensemble") table = build_fig8(c);
  else if (name == "appxA_detuning") table = build_appxA(c);
  else if (name == "appxB_linearization") table = build_appxB(c);
  else if (name == "appxC_smallterm") table = build_appxC(c);
  else if (name == "threshold_report") table = build_threshold(c);
  else table = build_velocity_sweep(c, name);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
          .count();

  SweepResult res;
  res.scenario = name;
  res.runtime_s = secs;
  res.max_norm_drift = c.max_drift;

  table.add_meta("scenario", name);
  table.add_meta("generator", "darkstate 0.1.0");
  table.add_meta("git", DARKSTATE_GIT_REV);
  table.add_meta("params_hash", params_hash(c.p));
  table.add_meta("rtol", format_double(c.rtol));
  table.add_meta("atol", format_double(c.atol));
  table.add_meta("points", std::to_string(c.points));
  for (const auto& [k, v] : c.used_knobs) table.add_meta(k, v);
  if (c.max_drift > 0)
    table.add_meta("max_norm_drift", format_double(c.max_drift));
  std::time_t now = std::time(nullptr);
  char ts[32];
  std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  table.add_meta("timestamp", ts);
  char rt[32];
  std::snprintf(rt, sizeof(rt), "%.3f", secs);
  table.add_meta("runtime_s", rt);

  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    const std::string csv_name = name + ".csv";
    res.csv_path = (std::filesystem::path(opt.out_dir) / csv_name).string();
    table.write(res.csv_path);
    res.gp_path =
        (std::filesystem::path(opt.out_dir) / (name + ".gp")).string();
    std::ofstream gp(res.gp_path);
    if (!gp) throw std::runtime_error("cannot write " + res.gp_path);
    gp << gp_script(name, csv_name);
  }
  res.table = std::move(table);
  return res;
}

}  // namespace darkstate
