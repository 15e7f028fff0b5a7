#pragma once

#include <vector>

#include "darkstate/landau_zener.hpp"

namespace darkstate {

// Gaussian speed distribution truncated to v >= 0.
struct VelocityDistribution {
  double v0 = 0;       // central speed [lambda*gamma]
  double dv = 1.2e-3;  // width [lambda*gamma], > 0
};

double pdf_unnormalized(double v, const VelocityDistribution& dist);

// A = integral_0^inf exp(-((v - v0)/dv)^2) dv
//   = (sqrt(pi)*dv/2) * (1 + erf(v0/dv)).
double normalization_A(const VelocityDistribution& dist);

enum class SurvivalMode { analytic, numeric };

// Piecewise-linear memo of the numerically integrated survival P(v) for a
// constant-velocity start at z0. Built once, then read concurrently.
class SurvivalTable {
 public:
  SurvivalTable() = default;

  // Adaptive refinement until the midpoint deviation from linear
  // interpolation is below interp_tol/2 everywhere (or the grid step reaches
  // 1e-5).
  static SurvivalTable build(double z0, const PulseShape& pulse,
                             const PhysicalParams& p, double v_lo, double v_hi,
                             double interp_tol = 1e-3, double ode_rtol = 1e-10,
                             unsigned jobs = 1);

  double operator()(double v) const;
  bool covers(double lo, double hi) const;
  std::size_t size() const { return vs_.size(); }

 private:
  std::vector<double> vs_, ps_;
};

// Speeds in (v_lo, v_hi) where the node-crossing count of a constant-velocity
// trajectory from z0 changes; located by bisection on the detected count.
std::vector<double> segment_boundaries(double z0, const PulseShape& pulse,
                                       const PhysicalParams& p, double v_lo,
                                       double v_hi);

// P(v0) = B(v0)/A(v0) with B integrating pdf * P(v) by per-segment
// Gauss-Legendre. The integration window is [max(0, v0 - 8 dv), v0 + 8 dv]
// split at the segment boundaries, so narrow distributions are resolved.
// numeric mode reads P(v) from `table` (built on demand when null).
double ensemble_survival(const VelocityDistribution& dist,
                         const PulseShape& pulse, const PhysicalParams& p,
                         double z0, SurvivalMode mode,
                         const SurvivalTable* table = nullptr,
                         int gl_points = 64);

}  // namespace darkstate
