#include "darkstate/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "darkstate/dressed.hpp"

namespace darkstate {

StateVec pack_state(const AmplitudeState& s) {
  return {s.c0.real(),      s.c0.imag(),      s.c_plus.real(),
          s.c_plus.imag(),  s.c_minus.real(), s.c_minus.imag(),
          s.phi};
}

AmplitudeState unpack_state(const StateVec& y) {
  return {{y[0], y[1]}, {y[2], y[3]}, {y[4], y[5]}, y[6]};
}

namespace {

double chi_at(const Trajectory& traj, const PhysicalParams& p, double t) {
  const Position pos = position(traj, t);
  if (traj.kind == MotionKind::line3d) return chi(pos, p.waist0);
  return chi_1d(pos.z);
}

}  // namespace

void rhs_resonant(double t, const StateVec& y, StateVec& dy,
                  const Trajectory& traj, const PulseShape& pulse,
                  const PhysicalParams& p) {
  const double a = alpha(t, pulse);
  const double ad = alpha_dot(t, pulse);
  const double kc = coupling_K(a, ad, p.r0);
  const double ra = p.r0 * a;
  const double eps = chi_at(traj, p, t) * p.g0 * std::sqrt(1.0 + ra * ra);

  const double c = std::cos(y[6]);
  const double s = std::sin(y[6]);
  // e^{-i phi} c+ + e^{+i phi} c-
  const double sum_re = (c * y[2] + s * y[3]) + (c * y[4] - s * y[5]);
  const double sum_im = (c * y[3] - s * y[2]) + (c * y[5] + s * y[4]);
  dy[0] = -kc * sum_re;
  dy[1] = -kc * sum_im;
  // K e^{+i phi} c0
  dy[2] = kc * (c * y[0] - s * y[1]);
  dy[3] = kc * (c * y[1] + s * y[0]);
  // K e^{-i phi} c0
  dy[4] = kc * (c * y[0] + s * y[1]);
  dy[5] = kc * (c * y[1] - s * y[0]);
  dy[6] = eps;
}

void rhs_detuned(double t, const StateVec& y, StateVec& dy,
                 const Trajectory& traj, const PulseShape& pulse,
                 const PhysicalParams& p) {
  const double a = alpha(t, pulse);
  const double ad = alpha_dot(t, pulse);
  const double kc = coupling_K(a, ad, p.r0);
  const double ra = p.r0 * a;
  const double eps = chi_at(traj, p, t) * p.g0 * std::sqrt(1.0 + ra * ra);
  const double d = p.delta;

  const double c = std::cos(y[6]);
  const double s = std::sin(y[6]);
  const double cd = std::cos(d * t);
  const double sd = std::sin(d * t);

  // (e^{-i phi} c+ + e^{+i phi} c-) e^{-i delta t}
  const double sum_re = (c * y[2] + s * y[3]) + (c * y[4] - s * y[5]);
  const double sum_im = (c * y[3] - s * y[2]) + (c * y[5] + s * y[4]);
  dy[0] = -kc * (cd * sum_re + sd * sum_im);
  dy[1] = -kc * (cd * sum_im - sd * sum_re);

  // c0 e^{+-i phi} e^{+i delta t}
  const double ep_re = c * cd - s * sd;  // e^{i(phi + delta t)}
  const double ep_im = s * cd + c * sd;
  const double em_re = c * cd + s * sd;  // e^{i(delta t - phi)}
  const double em_im = c * sd - s * cd;
  // i delta/2 rotations; e^{+-2i phi} via double angle
  const double c2 = c * c - s * s;
  const double s2 = 2.0 * c * s;
  const double hd = 0.5 * d;

  // dc+ = K c0 e^{i(phi + dt)} + i hd (c- e^{2i phi} + c+)
  const double wp_re = c2 * y[4] - s2 * y[5] + y[2];
  const double wp_im = c2 * y[5] + s2 * y[4] + y[3];
  dy[2] = kc * (ep_re * y[0] - ep_im * y[1]) - hd * wp_im;
  dy[3] = kc * (ep_re * y[1] + ep_im * y[0]) + hd * wp_re;

  // dc- = K c0 e^{i(dt - phi)} + i hd (c+ e^{-2i phi} + c-)
  const double wm_re = c2 * y[2] + s2 * y[3] + y[4];
  const double wm_im = c2 * y[3] - s2 * y[2] + y[5];
  dy[4] = kc * (em_re * y[0] - em_im * y[1]) - hd * wm_im;
  dy[5] = kc * (em_re * y[1] + em_im * y[0]) + hd * wm_re;

  dy[6] = eps;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

IntegrationReport integrate(const Trajectory& traj, const PulseShape& pulse,
                            const PhysicalParams& p, double t0, double t1,
                            double rtol, double atol,
                            const AmplitudeState* initial) {
  if (rtol <= 0 || atol <= 0)
    throw std::invalid_argument("integrate: tolerances must be > 0");
  validate(traj);

  const bool detuned = p.delta != 0.0;
  auto rhs = [&](double t, const StateVec& y, StateVec& dy) {
    if (detuned) {
      rhs_detuned(t, y, dy, traj, pulse, p);
    } else {
      rhs_resonant(t, y, dy, traj, pulse, p);
    }
  };

  const double ra0 = p.r0 * pulse.alpha0;
  const double eps_max = p.g0 * std::sqrt(1.0 + ra0 * ra0);
  const double h_max =
      1.0 / (10.0 * (two_pi * eps_max + std::abs(p.delta)));

  StateVec y = initial ? pack_state(*initial)
                       : StateVec{1, 0, 0, 0, 0, 0, 0};
  StateVec k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

  IntegrationReport report;
  double t = t0;
  double h = std::min(h_max, (t1 - t0) / 1000.0);
  rhs(t, y, k1);  // FSAL: k1 always matches (t, y)

  while (t < t1) {
    if (h < 1e-15) {
      std::ostringstream msg;
      msg << "integrate: step size underflow at t = " << t;
      throw std::runtime_error(msg.str());
    }
    h = std::min(h, t1 - t);

    for (int i = 0; i < 7; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (int i = 0; i < 7; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (int i = 0; i < 7; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (int i = 0; i < 7; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                            a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (int i = 0; i < 7; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (int i = 0; i < 7; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err_sq = 0;
    for (int i = 0; i < 7; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                            e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err_sq += (e / scale) * (e / scale);
    }
    const double err = std::sqrt(err_sq / 7.0);

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
      ++report.steps;
      const double norm =
          y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3] +
          y[4] * y[4] + y[5] * y[5];
      const double drift = std::abs(norm - 1.0);
      report.max_norm_drift = std::max(report.max_norm_drift, drift);
      if (drift > 100.0 * rtol) {
        std::ostringstream msg;
        msg << "integrate: norm drift " << drift << " exceeds bound at t = "
            << t;
        throw std::runtime_error(msg.str());
      }
      const double grow =
          err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h = std::min(h * std::clamp(grow, 0.2, 5.0), h_max);
    } else {
      ++report.rejected_steps;
      const double shrink = std::max(0.9 * std::pow(err, -0.2), 0.2);
      h *= std::min(shrink, 1.0);
    }
  }

  report.final_state = unpack_state(y);
  report.p_dark = y[0] * y[0] + y[1] * y[1];
  return report;
}

}  // namespace darkstate
