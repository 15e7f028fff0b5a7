#pragma once

#include "darkstate/units.hpp"

namespace darkstate {

struct Position {
  double z = 0;    // axial coordinate [lambda]
  double rho = 0;  // radial coordinate [lambda], >= 0
};

// Gaussian pulse alpha(t) = alpha0 * exp(-((t - T0)/tW)^2), real by construction.
struct PulseShape {
  double alpha0 = 30.0;
  double T0 = 10.0;
  double tW = 10.0 / 3.0;

  static PulseShape from_params(const PhysicalParams& p) {
    return {p.alpha0, p.T0, p.tW};
  }
};

// Standing-wave Gaussian mode (w0/w)*exp(-rho^2/w^2)*sin(kz),
// w(z) = w0*sqrt(1 + z^2/zr^2), zr = pi*w0^2. Signed; |chi| <= 1.
double chi(const Position& pos, double waist0);

// Beam radius w(z) [lambda].
double beam_radius(double z, double waist0);

// Axial-only mode sin(2*pi*z) used by the 1D scenarios.
double chi_1d(double z);

double alpha(double t, const PulseShape& pulse);
double alpha_dot(double t, const PulseShape& pulse);

// Matched classical pump: Omega(r, t) = r0 * alpha(t) * g(r).
double pump_amplitude(double g_val, double alpha_val, double r0);

}  // namespace darkstate
