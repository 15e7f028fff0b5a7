#include "darkstate/field.hpp"

#include <cmath>

namespace darkstate {

double beam_radius(double z, double waist0) {
  const double zr = M_PI * waist0 * waist0;  // Rayleigh range, lambda = 1
  const double q = z / zr;
  return waist0 * std::sqrt(1.0 + q * q);
}

double chi(const Position& pos, double waist0) {
  const double w = beam_radius(pos.z, waist0);
  const double envelope = (waist0 / w) * std::exp(-(pos.rho * pos.rho) / (w * w));
  return envelope * std::sin(k_wavenumber * pos.z);
}

double chi_1d(double z) { return std::sin(k_wavenumber * z); }

double alpha(double t, const PulseShape& pulse) {
  const double u = (t - pulse.T0) / pulse.tW;
  return pulse.alpha0 * std::exp(-u * u);
}

double alpha_dot(double t, const PulseShape& pulse) {
  return -2.0 * (t - pulse.T0) / (pulse.tW * pulse.tW) * alpha(t, pulse);
}

double pump_amplitude(double g_val, double alpha_val, double r0) {
  return r0 * alpha_val * g_val;
}

}  // namespace darkstate
