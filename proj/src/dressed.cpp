#include "darkstate/dressed.hpp"

#include <cmath>

namespace darkstate {

Eigen::Matrix3cd hamiltonian_matrix(std::complex<double> g,
                                    std::complex<double> omega, double delta) {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(0, 0) = delta;
  h(0, 1) = g;
  h(0, 2) = omega;
  h(1, 0) = std::conj(g);
  h(2, 0) = std::conj(omega);
  return h;
}

DressedSpectrum dressed_energies(double chi_val, double alpha_val,
                                 const PhysicalParams& p) {
  const double ra = p.r0 * alpha_val;
  DressedSpectrum s;
  s.e0 = 0.0;
  s.epsilon = chi_val * p.g0 * std::sqrt(1.0 + ra * ra);
  if (p.delta == 0.0) {
    s.e_plus = s.epsilon;
    s.e_minus = -s.epsilon;
    return s;
  }
  const double g = p.g0 * chi_val;
  const double omega = p.r0 * alpha_val * g;
  const double root =
      std::sqrt(4.0 * g * g + 4.0 * omega * omega + p.delta * p.delta);
  s.e_plus = 0.5 * (p.delta + root);
  s.e_minus = 0.5 * (p.delta - root);
  return s;
}

Eigen::Vector3cd dark_state(std::complex<double> g, std::complex<double> omega) {
  const double n = std::sqrt(std::norm(g) + std::norm(omega));
  if (n == 0.0) return {0.0, 0.0, 1.0};
  return {std::complex<double>(0.0), -omega / n, g / n};
}

Eigen::Vector3cd bright_state(double g, double omega, int sign) {
  const double n = std::sqrt(g * g + omega * omega);
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {s * inv_sqrt2, g / n * inv_sqrt2, omega / n * inv_sqrt2};
}

double coupling_K(double alpha_val, double alpha_dot_val, double r0) {
  const double ra = r0 * alpha_val;
  return r0 * alpha_dot_val / (std::sqrt(2.0) * (1.0 + ra * ra));
}

double adiabaticity_f(double t, const PulseShape& pulse, double g0) {
  const double a = alpha(t, pulse);
  const double ad = alpha_dot(t, pulse);
  return std::abs(ad) / (std::sqrt(2.0) * g0 * std::pow(1.0 + a * a, 1.5));
}

double lz_h(double t, const PulseShape& pulse) {
  const double a = alpha(t, pulse);
  const double ad = alpha_dot(t, pulse);
  return ad * ad / std::pow(1.0 + a * a, 2.5);
}

}  // namespace darkstate
