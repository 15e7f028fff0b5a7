#pragma once

#include <Eigen/Dense>
#include <complex>

#include "darkstate/field.hpp"
#include "darkstate/units.hpp"

namespace darkstate {

// Instantaneous eigenvalues of the Raman-coupled three-level system.
// epsilon is the resonant half-gap chi*g0*sqrt(1 + |r0 alpha|^2), signed with
// chi so that branch labels follow the adiabatic continuation through nodes:
// e_plus < e_minus whenever chi*g0 < 0.
struct DressedSpectrum {
  double e0 = 0;
  double e_plus = 0;
  double e_minus = 0;
  double epsilon = 0;
};

// Interaction-picture matrix in the bare basis {|e,0>, |g0,1>, |g1,0>}:
//   [[delta, g, omega], [conj(g), 0, 0], [conj(omega), 0, 0]].
Eigen::Matrix3cd hamiltonian_matrix(std::complex<double> g,
                                    std::complex<double> omega, double delta);

// delta = 0: E+- = +-epsilon, E0 = 0.
// delta != 0: E+- = (delta +- sqrt(4g^2 + 4omega^2 + delta^2))/2, E0 = 0;
// epsilon still reports the signed resonant half-gap used as the phase rate.
DressedSpectrum dressed_energies(double chi_val, double alpha_val,
                                 const PhysicalParams& p);

// Zero-energy eigenstate (0, -omega, g)/sqrt(|g|^2 + |omega|^2); has no
// excited-state component for any couplings.
Eigen::Vector3cd dark_state(std::complex<double> g, std::complex<double> omega);

// Orthogonal dressed pair (|B> +- |e,0>)/sqrt(2) for delta = 0 and real
// couplings with (g, omega) != (0, 0); eigenvalue +-sqrt(g^2 + omega^2).
Eigen::Vector3cd bright_state(double g, double omega, int sign);

// Nonadiabatic coupling <D|dB/dt> = r0*alpha_dot/(sqrt(2)*(1 + |r0 alpha|^2)),
// real and sign-carrying.
double coupling_K(double alpha_val, double alpha_dot_val, double r0);

// f(t) = |alpha_dot|/(sqrt(2)*g0*(1 + alpha^2)^{3/2}); the adiabaticity ratio
// |K/E+-| equals f/|sin kz|. Assumes r0 = 1.
double adiabaticity_f(double t, const PulseShape& pulse, double g0);

// h(t) = 2 K^2 / sqrt(1 + alpha^2) = alpha_dot^2/(1 + alpha^2)^{5/2} for
// r0 = 1; the crossing-strength entering the survival exponent.
double lz_h(double t, const PulseShape& pulse);

}  // namespace darkstate
