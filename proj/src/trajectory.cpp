#include "darkstate/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "darkstate/dressed.hpp"

namespace darkstate {

void validate(const Trajectory& traj) {
  if (traj.v < 0) throw std::invalid_argument("trajectory: v must be >= 0");
  if (traj.kind == MotionKind::harmonic && traj.omega_t <= 0)
    throw std::invalid_argument("trajectory: omega_t must be > 0");
  if (traj.kind == MotionKind::line3d &&
      (traj.theta < 0 || traj.theta >= M_PI / 2))
    throw std::invalid_argument("trajectory: theta must be in [0, pi/2)");
  if (traj.kind == MotionKind::line3d && traj.rho0 < 0)
    throw std::invalid_argument("trajectory: rho0 must be >= 0");
}

Position position(const Trajectory& traj, double t) {
  switch (traj.kind) {
    case MotionKind::constant_v:
      return {traj.z0 + traj.v * t, 0.0};
    case MotionKind::harmonic:
      return {traj.z0 + traj.direction * (traj.v / traj.omega_t) *
                            std::sin(traj.omega_t * t),
              0.0};
    case MotionKind::line3d: {
      const double zt = traj.z0 + traj.v * std::cos(traj.theta) * t;
      const double rt = traj.v * std::sin(traj.theta) * t;
      return {zt, std::sqrt(traj.rho0 * traj.rho0 + rt * rt)};
    }
  }
  return {};
}

double axial_velocity_signed(const Trajectory& traj, double t) {
  switch (traj.kind) {
    case MotionKind::constant_v:
      return traj.v;
    case MotionKind::harmonic:
      return traj.direction * traj.v * std::cos(traj.omega_t * t);
    case MotionKind::line3d:
      return traj.v * std::cos(traj.theta);
  }
  return 0;
}

double axial_velocity(const Trajectory& traj, double t) {
  return std::abs(axial_velocity_signed(traj, t));
}

namespace {

double axial_sine(const Trajectory& traj, double t) {
  return std::sin(k_wavenumber * position(traj, t).z);
}

double bisect_root(const Trajectory& traj, double a, double b, double sa) {
  for (int i = 0; i < 200 && (b - a) > 1e-10; ++i) {
    const double m = 0.5 * (a + b);
    const double sm = axial_sine(traj, m);
    if (sm == 0.0) return m;
    if (sa * sm < 0) {
      b = m;
    } else {
      a = m;
      sa = sm;
    }
  }
  return 0.5 * (a + b);
}

// Turning-point time: dz/dt changes sign in [a, b].
double bisect_turning(const Trajectory& traj, double a, double b) {
  double va = axial_velocity_signed(traj, a);
  for (int i = 0; i < 200 && (b - a) > 1e-12; ++i) {
    const double m = 0.5 * (a + b);
    const double vm = axial_velocity_signed(traj, m);
    if (va * vm <= 0) {
      b = m;
    } else {
      a = m;
      va = vm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<CrossingEvent> find_node_crossings(const Trajectory& traj,
                                               const PulseShape& pulse,
                                               double t0, double t1) {
  validate(traj);
  std::vector<CrossingEvent> events;
  if (t1 <= t0) return events;

  double max_zdot = traj.v;
  if (traj.kind == MotionKind::line3d) max_zdot = traj.v * std::cos(traj.theta);
  if (max_zdot <= 0) return events;

  const double dt = std::min(1.0 / (100.0 * max_zdot), pulse.T0 / 1000.0);
  const auto n_steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));

  auto push_event = [&](double t_star, bool tangential) {
    if (!events.empty() && std::abs(events.back().t_star - t_star) < 1e-9)
      return;
    CrossingEvent ev;
    ev.t_star = t_star;
    ev.tangential = tangential;
    ev.v_axial = tangential ? 0.0 : axial_velocity(traj, t_star);
    ev.h_star = lz_h(t_star, pulse);
    events.push_back(ev);
  };

  double t_prev = t0;
  double s_prev = axial_sine(traj, t_prev);
  double s_before = s_prev;  // for tangential local-minimum detection
  double t_before = t_prev;
  if (s_prev == 0.0) push_event(t_prev, false);

  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double t = std::min(t0 + static_cast<double>(i) * dt, t1);
    const double s = axial_sine(traj, t);
    if (s == 0.0) {
      push_event(t, std::abs(axial_velocity_signed(traj, t)) < 1e-12);
    } else if (s_prev != 0.0 && s_prev * s < 0) {
      push_event(bisect_root(traj, t_prev, t, s_prev), false);
    } else if (traj.kind == MotionKind::harmonic && s_prev != 0.0 &&
               std::abs(s_prev) < 1e-6 && std::abs(s_prev) <= std::abs(s) &&
               std::abs(s_prev) <= std::abs(s_before) &&
               s_before * s > 0) {
      // |sin| has a sub-threshold local minimum without a sign change: the
      // turning point may touch a node tangentially.
      const double tm = bisect_turning(traj, t_before, t);
      if (std::abs(axial_sine(traj, tm)) < 1e-9) push_event(tm, true);
    }
    s_before = s_prev;
    t_before = t_prev;
    s_prev = s;
    t_prev = t;
    if (t >= t1) break;
  }

  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& a, const CrossingEvent& b) {
              return a.t_star < b.t_star;
            });
  return events;
}

}  // namespace darkstate
