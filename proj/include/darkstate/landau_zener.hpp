#pragma once

#include <vector>

#include "darkstate/trajectory.hpp"

namespace darkstate {

struct LzPrediction {
  double p_total = 1.0;
  std::vector<CrossingEvent> per_node;
  bool tangential_flag = false;
  // Two crossings closer in time than 10/eps_max; the product is still
  // returned but is only trustworthy for well-separated crossings.
  bool overlapping_flag = false;
};

// Survival probability for one linear node crossing:
//   P = exp(-2*pi*h_star/(k*v_axial*g0)), k = 2*pi.
// v_axial <= 0 returns 0 (tangential limit of the formula).
double survival_single(double h_star, double v_axial, double g0);

// Detects crossings over [t0, t1], evaluates h at each crossing instant and
// multiplies the per-node survivals. No crossings means p_total = 1.
LzPrediction predict(const Trajectory& traj, const PulseShape& pulse,
                     const PhysicalParams& p, double t0, double t1);

}  // namespace darkstate
