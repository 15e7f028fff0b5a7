#include "darkstate/landau_zener.hpp"

#include <cmath>

namespace darkstate {

double survival_single(double h_star, double v_axial, double g0) {
  if (v_axial <= 0) return 0.0;
  return std::exp(-two_pi * h_star / (k_wavenumber * v_axial * g0));
}

LzPrediction predict(const Trajectory& traj, const PulseShape& pulse,
                     const PhysicalParams& p, double t0, double t1) {
  LzPrediction out;
  out.per_node = find_node_crossings(traj, pulse, t0, t1);

  const double ra0 = p.r0 * pulse.alpha0;
  const double eps_max = p.g0 * std::sqrt(1.0 + ra0 * ra0);
  const double min_gap = 10.0 / eps_max;

  for (std::size_t i = 0; i < out.per_node.size(); ++i) {
    CrossingEvent& ev = out.per_node[i];
    ev.p_i = survival_single(ev.h_star, ev.v_axial, p.g0);
    out.p_total *= ev.p_i;
    if (ev.tangential) out.tangential_flag = true;
    if (i > 0 &&
        ev.t_star - out.per_node[i - 1].t_star < min_gap)
      out.overlapping_flag = true;
  }
  return out;
}

}  // namespace darkstate
