#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace darkstate {

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence and cached per order. Safe for concurrent use.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  static const GaussLegendre& get(int n);
};

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n);

std::complex<double> integrate_gl_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n);

}  // namespace darkstate
