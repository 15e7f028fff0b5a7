#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "darkstate/trajectory.hpp"

namespace darkstate {

// Adiabatic-frame amplitudes plus the accumulated phase Phi = int_0^t eps dt'.
struct AmplitudeState {
  std::complex<double> c0{1.0, 0.0};
  std::complex<double> c_plus{0.0, 0.0};
  std::complex<double> c_minus{0.0, 0.0};
  double phi = 0;
};

// Flat layout used by the integrator:
// [Re c0, Im c0, Re c+, Im c+, Re c-, Im c-, phi].
using StateVec = std::array<double, 7>;

StateVec pack_state(const AmplitudeState& s);
AmplitudeState unpack_state(const StateVec& y);

struct IntegrationReport {
  AmplitudeState final_state;
  double p_dark = 0;          // |c0|^2 at the end of the window
  double max_norm_drift = 0;  // max | sum |c_n|^2 - 1 | over accepted steps
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
};

// Resonant amplitude equations (delta = 0):
//   dc0 = -K (e^{-i phi} c+ + e^{+i phi} c-),  dc+- = K e^{+-i phi} c0,
//   dphi = eps(t) = chi[z(t)] g0 sqrt(1 + |r0 alpha|^2), signed through nodes.
void rhs_resonant(double t, const StateVec& y, StateVec& dy,
                  const Trajectory& traj, const PulseShape& pulse,
                  const PhysicalParams& p);

// Detuned equations; reduce bitwise to rhs_resonant when delta = 0:
//   dc0 = -K (e^{-i phi} c+ + e^{+i phi} c-) e^{-i delta t}
//   dc+ =  K c0 e^{+i phi} e^{+i delta t} + i delta/2 (c- e^{+2i phi} + c+)
//   dc- =  K c0 e^{-i phi} e^{+i delta t} + i delta/2 (c+ e^{-2i phi} + c-)
void rhs_detuned(double t, const StateVec& y, StateVec& dy,
                 const Trajectory& traj, const PulseShape& pulse,
                 const PhysicalParams& p);

// Adaptive Dormand-Prince 5(4) over [t0, t1]. Step size is capped at
// 1/(10*(2*pi*max|eps| + |delta|)) to resolve the phase oscillation.
// Starts from |D> (c0 = 1) unless an initial state is supplied.
// Throws std::runtime_error on step underflow or norm drift > 100*rtol.
IntegrationReport integrate(const Trajectory& traj, const PulseShape& pulse,
                            const PhysicalParams& p, double t0, double t1,
                            double rtol = 1e-10, double atol = 1e-12,
                            const AmplitudeState* initial = nullptr);

}  // namespace darkstate
