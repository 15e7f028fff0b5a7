#pragma once

#include "darkstate/trajectory.hpp"

namespace darkstate {

// Neglected-term amplitude S(x) = 2 |int_{-a}^{x} e^{-i tau^2} tau dtau|
// = |e^{-i x^2} - e^{-i a^2}|, evaluated at a fixed worst-case pulse value
// alpha = 0.55 (the point of maximal alpha_dot, sqrt(1 + alpha^2) = 1.14).
// a = sqrt(k*v*g0*sqrt(1 + alpha^2)) * 0.77/(k*v); 0.77 is the rounded
// arcsin(0.7) of the linearized crossing window.
inline constexpr double small_term_worst_alpha = 0.55;
inline constexpr double small_term_window = 0.77;

double small_term_a(double v, const PhysicalParams& p);
double small_term_S(double x, double v, const PhysicalParams& p);

// Same S from panelled Gauss-Legendre quadrature of the oscillatory
// integral; agrees with the closed form to ~1e-10.
double small_term_S_quad(double x, double v, const PhysicalParams& p);

// Largest x-location of the global maximum S = 2 (phase difference pi).
double small_term_peak_x(double v, const PhysicalParams& p);

// Worst relative error of the linearization sin(kz) ~ kz over
// |sin(kz)| <= bound: (asin(bound) - bound)/bound. Requires 0 < bound < 1.
double linearization_error(double bound);

struct TrapFrequencies {
  double omega_recoil = 0;  // hbar k^2 / (2 M) [gamma]
  double omega_z = 0;       // sqrt(2 g0 omega_recoil) [gamma]
  double omega_rho = 0;     // 2 sqrt(g0 omega_recoil)/(k w(0)) [gamma]
  double omega_recoil_si = 0;  // [rad/s]
  double omega_z_si = 0;       // [rad/s]
  double omega_rho_si = 0;     // [rad/s]
};

// Harmonic frequencies of the optical potential at an antinode, in natural
// units and as angular SI rates (divide the _si values by 2*pi for Hz).
TrapFrequencies trap_frequencies(const PhysicalParams& p);

struct ThresholdReport {
  bool pass = true;          // max exponent < 0.1 and at most one crossing
  double worst_exponent = 0; // max over crossings of 2*pi*h/(k*v*g0)
  double total_exponent = 0; // sum over crossings, = -ln(predicted survival)
  int node_count = 0;
  bool tangential = false;
  bool reaches_node = false;
  bool at_speed_threshold = false;  // |v - lambda*gamma/48| < 1e-9
};

// Speed above which a single crossing stays deep in the adiabatic regime.
inline constexpr double speed_threshold = 1.0 / 48.0;  // [lambda*gamma]

ThresholdReport adiabatic_threshold_check(const Trajectory& traj,
                                          const PulseShape& pulse,
                                          const PhysicalParams& p);

}  // namespace darkstate
