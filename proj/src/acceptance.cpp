#include "darkstate/acceptance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "darkstate/diagnostics.hpp"
#include "darkstate/dressed.hpp"
#include "darkstate/dynamics.hpp"
#include "darkstate/ensemble.hpp"
#include "darkstate/landau_zener.hpp"
#include "darkstate/scenarios.hpp"

namespace darkstate {
namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double lap() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string num(double x) {
  char b[32];
  std::snprintf(b, sizeof(b), "%.4g", x);
  return b;
}

std::vector<double> col(const CsvTable& t, const std::string& name) {
  const auto& names = t.columns();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::logic_error("missing column " + name);
  const std::size_t ci = it - names.begin();
  std::vector<double> v(t.row_count());
  for (std::size_t i = 0; i < t.row_count(); ++i) v[i] = t.row(i)[ci];
  return v;
}

double window_min(const std::vector<double>& x, const std::vector<double>& y,
                  double lo, double hi) {
  double m = 2.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] >= lo && x[i] <= hi) m = std::min(m, y[i]);
  return m;
}

// max and mean |p_lz - p_ode| over non-tangential rows, plus the arg-max v.
struct Agreement {
  double max = 0, mean = 0, v_at_max = 0;
};

Agreement lz_agreement(const CsvTable& t) {
  const auto v = col(t, "v"), po = col(t, "p_ode"), pl = col(t, "p_lz"),
             tg = col(t, "tangential");
  Agreement a;
  std::size_t n = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (tg[i] != 0) continue;
    const double d = std::abs(po[i] - pl[i]);
    if (d > a.max) {
      a.max = d;
      a.v_at_max = v[i];
    }
    a.mean += d;
    ++n;
  }
  if (n) a.mean /= n;
  return a;
}

std::vector<std::size_t> strict_maxima(const std::vector<double>& y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] > y[i + 1]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::size_t> prominent_minima(const std::vector<double>& y,
                                          double min_prominence) {
  std::vector<std::size_t> out;
  const std::size_t n = y.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] < y[i - 1] && y[i] < y[i + 1])) continue;
    double left_high = y[i];
    for (std::size_t j = i; j > 0 && y[j - 1] >= y[i]; --j)
      left_high = std::max(left_high, y[j - 1]);
    double right_high = y[i];
    for (std::size_t j = i; j + 1 < n && y[j + 1] >= y[i]; ++j)
      right_high = std::max(right_high, y[j + 1]);
    if (std::min(left_high, right_high) - y[i] >= min_prominence)
      out.push_back(i);
  }
  return out;
}

AcceptanceReport run_acceptance(const ParsedConfig& cfg, unsigned jobs,
                                std::ostream* progress) {
  AcceptanceReport rep;
  Stopwatch wall;
  RunOptions ropt;
  ropt.out_dir.clear();  // compute only
  ropt.jobs = jobs;

  const PhysicalParams& P = cfg.params;
  const PulseShape pulse = PulseShape::from_params(P);
  const double t_end = 2.0 * pulse.T0;

  auto emit = [&](int idx, const char* name, bool pass,
                  const std::string& detail, double secs) {
    rep.criteria.push_back({idx, name, pass, detail, secs});
    if (progress) {
      char head[32], tail[32];
      std::snprintf(head, sizeof(head), "[%2d/12] %s ", idx,
                    pass ? "PASS" : "FAIL");
      std::snprintf(tail, sizeof(tail), " (%.1f s)", secs);
      (*progress) << head << name << ": " << detail << tail << std::endl;
    }
  };

  // 1: closed-form dressed energies vs direct diagonalization
  {
    Stopwatch sw;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uchi(-1, 1), ualpha(-40, 40),
        udelta(-20, 20);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      PhysicalParams p = P;
      p.delta = udelta(rng);
      const double chi_v = uchi(rng);
      const double alpha_v = ualpha(rng);
      const auto sp = dressed_energies(chi_v, alpha_v, p);
      const double g = chi_v * p.g0;
      const double om = p.r0 * alpha_v * g;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(
          hamiltonian_matrix(g, om, p.delta));
      std::array<double, 3> mine{sp.e0, sp.e_plus, sp.e_minus};
      std::sort(mine.begin(), mine.end());
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(mine[k] - es.eigenvalues()[k]));
    }
    const double secs = sw.lap();
    emit(1, "eigen oracle", worst < 1e-10 && secs < 1.0,
         "max |dE| = " + num(worst) + " over 1000 draws", secs);
  }

  // 2: norm conservation across every integrating sweep (also builds the
  // sweep cache the later criteria read)
  Stopwatch sw_sweeps;
  const SweepResult fig6 = run_scenario("fig6_constv", cfg, ropt);
  const SweepResult fig7 = run_scenario("fig7_harmonic", cfg, ropt);
  const SweepResult fig9 = run_scenario("fig9_angle30", cfg, ropt);
  const SweepResult fig10 = run_scenario("fig10_angle60", cfg, ropt);
  const SweepResult appxA = run_scenario("appxA_detuning", cfg, ropt);
  {
    const double drift = std::max(
        {fig6.max_norm_drift, fig7.max_norm_drift, fig9.max_norm_drift,
         fig10.max_norm_drift, appxA.max_norm_drift});
    emit(2, "norm conservation", drift <= 1e-8,
         "max norm drift = " + num(drift) +
             " over fig6/fig7/fig9/fig10/appxA integrations",
         sw_sweeps.lap());
  }

  // 3: fig6 landmarks
  {
    Stopwatch sw;
    const auto v = col(fig6.table, "v");
    const auto p = col(fig6.table, "p_ode");
    double min_slow = 2.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0.01) min_slow = std::min(min_slow, p[i]);
    const auto mins = prominent_minima(p, valley_prominence);
    const bool two = mins.size() == 2;
    const bool w1 = two && v[mins[0]] >= 0.0145 && v[mins[0]] <= 0.0196;
    const bool w2 = two && v[mins[1]] >= 0.0417 && v[mins[1]] <= 0.0564;
    const bool deeper_first = two && p[mins[0]] < p[mins[1]];
    const bool fast = fig6.runtime_s < 120.0;
    std::ostringstream d;
    d << "min P(v<0.01) = " << num(min_slow) << "; " << mins.size()
      << " valleys:";
    for (auto i : mins) d << " v=" << num(v[i]) << " P=" << num(p[i]);
    d << "; sweep " << num(fig6.runtime_s) << " s";
    emit(3, "fig6 landmarks",
         min_slow > 0.99 && two && w1 && w2 && deeper_first && fast, d.str(),
         sw.lap());
  }

  // 4: Landau-Zener product vs direct integration, fig6 grid
  {
    Stopwatch sw;
    const Agreement a = lz_agreement(fig6.table);
    emit(4, "lz agreement fig6", a.max <= 0.1 && a.mean <= 0.05,
         "max |P_lz - P_ode| = " + num(a.max) + " at v = " + num(a.v_at_max) +
             ", mean = " + num(a.mean),
         sw.lap());
  }

  // 5: harmonic-trap valleys deeper, same agreement bounds
  {
    Stopwatch sw;
    const auto v6 = col(fig6.table, "v"), p6 = col(fig6.table, "p_ode");
    const auto v7 = col(fig7.table, "v"), p7 = col(fig7.table, "p_ode");
    const double m6a = window_min(v6, p6, 0.0145, 0.0196);
    const double m6b = window_min(v6, p6, 0.0417, 0.0564);
    const double m7a = window_min(v7, p7, 0.0145, 0.0196);
    const double m7b = window_min(v7, p7, 0.0417, 0.0564);
    const Agreement a = lz_agreement(fig7.table);
    const bool deeper = m7a < m6a && m7b < m6b;
    emit(5, "fig7 deeper valleys", deeper && a.max <= 0.1 && a.mean <= 0.05,
         "valley mins " + num(m7a) + "/" + num(m7b) + " vs fig6 " + num(m6a) +
             "/" + num(m6b) + "; max |P_lz - P_ode| = " + num(a.max) +
             ", mean = " + num(a.mean),
         sw.lap());
  }

  // 6: angled lines reduce to the axial problem
  {
    Stopwatch sw;
    const auto p3 = col(fig9.table, "p_ode");
    const auto p1 = col(fig9.table, "p_1d_equiv");
    double worst = 0;
    for (std::size_t i = 0; i < p3.size(); ++i)
      worst = std::max(worst, std::abs(p3[i] - p1[i]));
    const auto p60 = col(fig10.table, "p_ode");
    const auto mins = prominent_minima(p60, valley_prominence);
    emit(6, "angled-line checks", worst <= 0.02 && mins.size() == 1,
         "30 deg: max |P_3d - P_1d| = " + num(worst) + "; 60 deg: " +
             std::to_string(mins.size()) + " valley(s)",
         sw.lap());
  }

  // 7: detuned equations reproduce the resonant survival
  {
    Stopwatch sw;
    double worst = 0, worst_v = 0, worst_dm = 0;
    for (double v : {0.02, 0.03, 0.05}) {
      PhysicalParams p0 = P;
      p0.delta = 0;
      const Trajectory traj = Trajectory::constant(v, 0.25);
      const auto ref = integrate(traj, pulse, p0, 0.0, t_end);
      for (double dm : {0.2, 1.0}) {
        PhysicalParams pd = P;
        pd.delta = dm * P.g0;
        const auto rd = integrate(traj, pulse, pd, 0.0, t_end);
        const double diff = std::abs(rd.p_dark - ref.p_dark);
        if (diff > worst) {
          worst = diff;
          worst_v = v;
          worst_dm = dm;
        }
      }
    }
    emit(7, "detuning equivalence", worst <= 0.05,
         "max |P(delta) - P(0)| = " + num(worst) + " at v = " + num(worst_v) +
             ", delta = " + num(worst_dm) + " g0",
         sw.lap());
  }

  // 8: linear node approximation error at slope bound 0.7
  {
    Stopwatch sw;
    const double err = linearization_error(0.7);
    emit(8, "linearization error", std::abs(err - 0.1077) <= 5e-4,
         "error(0.7) = " + num(err), sw.lap());
  }

  // 9: neglected-term amplitude, closed form vs oscillatory quadrature
  {
    Stopwatch sw;
    const double v = 0.012;
    const double a = small_term_a(v, P);
    const double peak = small_term_S(small_term_peak_x(v, P), v, P);
    double dense_max = 0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -a + (small_term_peak_x(v, P) + 2.0 + a) * i / 2000.0;
      dense_max = std::max(dense_max, small_term_S(x, v, P));
    }
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ux(-a, a);
    double quad_err = 0;
    for (int i = 0; i < 50; ++i) {
      const double x = ux(rng);
      quad_err = std::max(quad_err, std::abs(small_term_S(x, v, P) -
                                             small_term_S_quad(x, v, P)));
    }
    emit(9, "small-term amplitude",
         std::abs(peak - 2.0) < 1e-9 && dense_max <= 2.0 + 1e-9 &&
             quad_err < 1e-8,
         "S(peak) = " + num(peak) + ", max S = " + num(dense_max) +
             ", closed-vs-quad = " + num(quad_err),
         sw.lap());
  }

  // 10: pulse diagnostics peak at the paper's instants
  {
    Stopwatch sw;
    const SweepResult fig4 = run_scenario("fig4_f", cfg, ropt);
    const SweepResult fig5 = run_scenario("fig5_h", cfg, ropt);
    auto peaks_of = [&](const SweepResult& r, const char* column) {
      const auto t = col(r.table, "t");
      const auto y = col(r.table, column);
      std::vector<double> ts;
      for (auto i : strict_maxima(y)) ts.push_back(t[i]);
      return ts;
    };
    const auto fp = peaks_of(fig4, "f");
    const auto hp = peaks_of(fig5, "h");
    auto near = [](const std::vector<double>& ts) {
      return ts.size() == 2 && std::abs(ts[0] - 3.3) <= 0.6 &&
             std::abs(ts[1] - 16.7) <= 0.6;
    };
    std::ostringstream d;
    d << "f peaks at";
    for (double t : fp) d << " " << num(t);
    d << "; h peaks at";
    for (double t : hp) d << " " << num(t);
    emit(10, "diagnostic peaks", near(fp) && near(hp), d.str(), sw.lap());
  }

  // 11: multi-node product stays close with two crossings
  {
    Stopwatch sw;
    double worst = 0, worst_v = 0;
    bool two_nodes = true;
    for (double v : {0.055, 0.06}) {
      const Trajectory traj = Trajectory::constant(v, 0.25);
      const auto rep_v = integrate(traj, pulse, P, 0.0, t_end);
      const auto lz = predict(traj, pulse, P, 0.0, t_end);
      two_nodes = two_nodes && lz.per_node.size() == 2;
      const double diff = std::abs(lz.p_total - rep_v.p_dark);
      if (diff > worst) {
        worst = diff;
        worst_v = v;
      }
    }
    emit(11, "two-node product", worst <= 0.1 && two_nodes,
         "max |prod P_i - P_ode| = " + num(worst) + " at v = " + num(worst_v),
         sw.lap());
  }

  // 12: ensemble averaging sanity and runtime
  {
    Stopwatch sw;
    const SweepResult fig8 = run_scenario("fig8_ensemble", cfg, ropt);
    const auto z = col(fig8.table, "z0");
    const auto v0 = col(fig8.table, "v0");
    const auto pa = col(fig8.table, "p_analytic");
    double min_at_zero = 2.0;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (v0[i] == 0.0) min_at_zero = std::min(min_at_zero, pa[i]);
    const double z0 = 5.0 / 12.0;
    const VelocityDistribution narrow{0.02, 1e-6};
    const double ens =
        ensemble_survival(narrow, pulse, P, z0, SurvivalMode::analytic);
    const double single =
        predict(Trajectory::constant(0.02, z0), pulse, P, 0.0, t_end).p_total;
    const bool fast = fig8.runtime_s < 300.0;
    emit(12, "ensemble sanity",
         min_at_zero > 0.99 && std::abs(ens - single) < 1e-3 && fast,
         "P(v0=0) >= " + num(min_at_zero) + "; delta-width gap = " +
             num(std::abs(ens - single)) + "; sweep " + num(fig8.runtime_s) +
             " s",
         sw.lap());
  }

  rep.total_seconds = wall.lap();
  rep.all_pass = std::all_of(rep.criteria.begin(), rep.criteria.end(),
                             [](const CriterionResult& c) { return c.pass; });
  if (progress) {
    int passed = 0;
    for (const auto& c : rep.criteria) passed += c.pass ? 1 : 0;
    (*progress) << passed << "/" << rep.criteria.size()
                << " criteria passed in " << num(rep.total_seconds) << " s"
                << std::endl;
  }
  return rep;
}

}  // namespace darkstate
