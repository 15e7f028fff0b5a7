#pragma once

#include <string>

namespace darkstate {

// Natural units used throughout: gamma = 1 (time), lambda = 1 (length),
// hbar = 1. Velocities are in lambda*gamma, energies and rates in gamma.
// SI values enter and leave only through to_natural/to_si.

inline constexpr double two_pi = 6.283185307179586476925287;
inline constexpr double k_wavenumber = two_pi;  // 2*pi/lambda with lambda = 1
inline constexpr double hbar_si = 1.054571817e-34;  // J s

enum class Kind { time, length, velocity, frequency };

struct PhysicalParams {
  double g0 = 0;         // vacuum Rabi coupling [gamma]
  double r0 = 0;         // pump-to-cavity amplitude ratio
  double alpha0 = 0;     // peak pulse parameter
  double T0 = 0;         // pulse center [1/gamma]
  double tW = 0;         // pulse width [1/gamma]
  double delta = 0;      // detuning [gamma]
  double lambda_si = 0;  // wavelength [m]
  double gamma_si = 0;   // decay rate [1/s]
  double mass_si = 0;    // atomic mass [kg]
  double waist0 = 0;     // mode waist at focus [lambda]
};

PhysicalParams default_params();

// Throws std::invalid_argument when a field is out of range.
void validate(const PhysicalParams& p);

double to_natural(double si_value, Kind kind, const PhysicalParams& p);
double to_si(double natural_value, Kind kind, const PhysicalParams& p);

Kind kind_from_string(const std::string& name);  // throws on unknown kind

}  // namespace darkstate
