#pragma once

#include <vector>

#include "darkstate/field.hpp"

namespace darkstate {

enum class MotionKind { constant_v, harmonic, line3d };

// Predetermined center-of-mass path. No force back-action.
struct Trajectory {
  MotionKind kind = MotionKind::constant_v;
  double v = 0;        // initial speed [lambda*gamma], >= 0
  double z0 = 0.25;    // initial axial position [lambda]
  double omega_t = 0;  // trap angular frequency [gamma] (harmonic)
  int direction = +1;  // sign of the initial axial velocity (harmonic)
  double theta = 0;    // angle to the cavity axis [rad] (line3d)
  double rho0 = 0;     // initial radial offset [lambda] (line3d)

  static Trajectory constant(double v, double z0) {
    return {MotionKind::constant_v, v, z0};
  }
  static Trajectory harmonic(double v, double z0, double omega_t,
                             int direction = +1) {
    return {MotionKind::harmonic, v, z0, omega_t, direction};
  }
  static Trajectory line(double v, double z0, double theta, double rho0 = 0) {
    return {MotionKind::line3d, v, z0, 0.0, +1, theta, rho0};
  }
};

void validate(const Trajectory& traj);  // throws std::invalid_argument

Position position(const Trajectory& traj, double t);

// |dz/dt| at time t.
double axial_velocity(const Trajectory& traj, double t);

// dz/dt with sign; used by crossing detection.
double axial_velocity_signed(const Trajectory& traj, double t);

struct CrossingEvent {
  double t_star = 0;       // crossing time [1/gamma]
  double v_axial = 0;      // |dz/dt| at the crossing; 0 for tangential touches
  double h_star = 0;       // h(t_star)
  double p_i = 1.0;        // per-node survival, filled by the predictor
  bool tangential = false; // node touched with zero axial speed
};

// All solutions of sin(2*pi*z(t)) = 0 in [t0, t1], ordered by time. Bracketed
// on a grid of step min(1/(100*max|dz/dt|), T0/1000), then bisected to 1e-10.
// Tangential touches (turning point on a node) are reported with v_axial = 0
// and flagged.
std::vector<CrossingEvent> find_node_crossings(const Trajectory& traj,
                                               const PulseShape& pulse,
                                               double t0, double t1);

}  // namespace darkstate
