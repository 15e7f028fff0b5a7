#include "darkstate/units.hpp"

#include <stdexcept>

namespace darkstate {

PhysicalParams default_params() {
  PhysicalParams p;
  p.g0 = 50.0 / 5.18;  // 2pi*50 MHz over gamma = 2pi*5.18 MHz
  p.r0 = 1.0;
  p.alpha0 = 30.0;
  p.T0 = 10.0;
  p.tW = p.T0 / 3.0;
  p.delta = 0.0;
  p.lambda_si = 852.35e-9;
  p.gamma_si = 1.0 / 30.70e-9;  // 1/gamma = 30.70 ns
  p.mass_si = 133.0 * 1.67e-27;
  p.waist0 = 30.0;
  return p;
}

void validate(const PhysicalParams& p) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid parameter: ") + what);
  };
  require(p.g0 > 0, "g0 must be > 0");
  require(p.tW > 0, "tW must be > 0");
  require(p.T0 > 0, "T0 must be > 0");
  require(p.alpha0 >= 0, "alpha0 must be >= 0");
  require(p.waist0 > 0, "waist0 must be > 0");
  require(p.lambda_si > 0, "lambda_si must be > 0");
  require(p.gamma_si > 0, "gamma_si must be > 0");
  require(p.mass_si > 0, "mass_si must be > 0");
}

double to_natural(double si_value, Kind kind, const PhysicalParams& p) {
  switch (kind) {
    case Kind::time: return si_value * p.gamma_si;
    case Kind::length: return si_value / p.lambda_si;
    case Kind::velocity: return si_value / (p.lambda_si * p.gamma_si);
    case Kind::frequency: return si_value / p.gamma_si;
  }
  throw std::invalid_argument("unknown unit kind");
}

double to_si(double natural_value, Kind kind, const PhysicalParams& p) {
  switch (kind) {
    case Kind::time: return natural_value / p.gamma_si;
    case Kind::length: return natural_value * p.lambda_si;
    case Kind::velocity: return natural_value * p.lambda_si * p.gamma_si;
    case Kind::frequency: return natural_value * p.gamma_si;
  }
  throw std::invalid_argument("unknown unit kind");
}

Kind kind_from_string(const std::string& name) {
  if (name == "time") return Kind::time;
  if (name == "length") return Kind::length;
  if (name == "velocity") return Kind::velocity;
  if (name == "frequency") return Kind::frequency;
  throw std::invalid_argument("unknown unit kind: " + name);
}

}  // namespace darkstate
