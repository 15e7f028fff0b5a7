#include "darkstate/diagnostics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "darkstate/landau_zener.hpp"
#include "darkstate/quadrature.hpp"

namespace darkstate {

double small_term_a(double v, const PhysicalParams& p) {
  if (v <= 0) throw std::invalid_argument("small_term: v must be > 0");
  const double kv = k_wavenumber * v;
  const double root = std::sqrt(
      kv * p.g0 *
      std::sqrt(1.0 + small_term_worst_alpha * small_term_worst_alpha));
  return root * small_term_window / kv;
}

double small_term_S(double x, double v, const PhysicalParams& p) {
  const double a = small_term_a(v, p);
  const std::complex<double> ea = std::polar(1.0, -a * a);
  const std::complex<double> ex = std::polar(1.0, -x * x);
  return std::abs(ex - ea);
}

double small_term_S_quad(double x, double v, const PhysicalParams& p) {
  const double a = small_term_a(v, p);
  const double lo = -a;
  if (x <= lo) return 0.0;
  auto f = [](double tau) {
    return std::polar(1.0, -tau * tau) * tau;
  };
  // Panel width small enough that the phase advances < pi/4 per panel.
  const double tau_max = std::max(std::abs(lo), std::abs(x));
  const double width = M_PI / (8.0 * (tau_max + 1.0));
  const int panels = static_cast<int>(std::ceil((x - lo) / width));
  std::complex<double> acc = 0;
  for (int i = 0; i < panels; ++i) {
    const double pa = lo + (x - lo) * i / panels;
    const double pb = lo + (x - lo) * (i + 1) / panels;
    acc += integrate_gl_complex(f, pa, pb, 16);
  }
  return 2.0 * std::abs(acc);
}

double small_term_peak_x(double v, const PhysicalParams& p) {
  const double a = small_term_a(v, p);
  return std::sqrt(a * a + M_PI);
}

double linearization_error(double bound) {
  if (bound <= 0 || bound >= 1)
    throw std::invalid_argument("linearization_error: bound must be in (0,1)");
  return (std::asin(bound) - bound) / bound;
}

TrapFrequencies trap_frequencies(const PhysicalParams& p) {
  TrapFrequencies f;
  const double k_si = two_pi / p.lambda_si;
  f.omega_recoil_si = hbar_si * k_si * k_si / (2.0 * p.mass_si);
  f.omega_recoil = to_natural(f.omega_recoil_si, Kind::frequency, p);
  f.omega_z = std::sqrt(2.0 * p.g0 * f.omega_recoil);
  f.omega_rho =
      2.0 * std::sqrt(p.g0 * f.omega_recoil) / (k_wavenumber * p.waist0);
  f.omega_z_si = to_si(f.omega_z, Kind::frequency, p);
  f.omega_rho_si = to_si(f.omega_rho, Kind::frequency, p);
  return f;
}

ThresholdReport adiabatic_threshold_check(const Trajectory& traj,
                                          const PulseShape& pulse,
                                          const PhysicalParams& p) {
  ThresholdReport rep;
  const auto events = find_node_crossings(traj, pulse, 0.0, 2.0 * pulse.T0);
  rep.node_count = static_cast<int>(events.size());
  rep.reaches_node = !events.empty();
  for (const auto& ev : events) {
    if (ev.tangential) {
      rep.tangential = true;
      continue;
    }
    const double expo =
        two_pi * ev.h_star / (k_wavenumber * ev.v_axial * p.g0);
    rep.worst_exponent = std::max(rep.worst_exponent, expo);
    rep.total_exponent += expo;
  }
  rep.at_speed_threshold = std::abs(traj.v - speed_threshold) < 1e-9;
  rep.pass = rep.worst_exponent < 0.1 && rep.node_count <= 1 &&
             !rep.tangential;
  return rep;
}

}  // namespace darkstate
