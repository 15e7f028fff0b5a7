#include "darkstate/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace darkstate {

namespace {

GaussLegendre compute(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess for the i-th root.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int n) {
  if (n < 1) throw std::invalid_argument("gauss-legendre order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute(n));
  return *slot;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n) {
  const auto& gl = GaussLegendre::get(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0;
  for (int i = 0; i < n; ++i)
    sum += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return sum * half;
}

std::complex<double> integrate_gl_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n) {
  const auto& gl = GaussLegendre::get(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> sum = 0;
  for (int i = 0; i < n; ++i)
    sum += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return sum * half;
}

}  // namespace darkstate
