#include <stdexcept>

#include "darkstate/units.hpp"
#include "doctest.h"

using namespace darkstate;

TEST_SUITE("units") {

TEST_CASE("defaults") {
  const PhysicalParams p = default_params();
  CHECK(p.g0 == doctest::Approx(50.0 / 5.18).epsilon(1e-14));
  CHECK(p.r0 == 1.0);
  CHECK(p.alpha0 == 30.0);
  CHECK(p.T0 == 10.0);
  CHECK(p.tW == doctest::Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(p.delta == 0.0);
  CHECK(p.lambda_si == doctest::Approx(852.35e-9).epsilon(1e-14));
  CHECK(p.gamma_si == doctest::Approx(1.0 / 30.70e-9).epsilon(1e-14));
  CHECK(p.mass_si == doctest::Approx(133.0 * 1.67e-27).epsilon(1e-14));
  CHECK(p.waist0 == 30.0);
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("validation rejects bad values") {
  PhysicalParams p = default_params();
  SUBCASE("g0") { p.g0 = 0; }
  SUBCASE("tW") { p.tW = -1; }
  SUBCASE("lambda_si") { p.lambda_si = 0; }
  SUBCASE("gamma_si") { p.gamma_si = -2; }
  SUBCASE("mass_si") { p.mass_si = 0; }
  SUBCASE("waist0") { p.waist0 = 0; }
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("si round trip") {
  const PhysicalParams p = default_params();
  for (Kind k : {Kind::time, Kind::length, Kind::velocity, Kind::frequency}) {
    const double x = 0.8375;
    CHECK(to_natural(to_si(x, k, p), k, p) == doctest::Approx(x).epsilon(1e-13));
  }
}

TEST_CASE("velocity unit is lambda gamma") {
  const PhysicalParams p = default_params();
  // 852.35 nm / 30.70 ns
  CHECK(to_si(1.0, Kind::velocity, p) ==
        doctest::Approx(27.7638).epsilon(1e-4));
}

TEST_CASE("pulse center from seconds") {
  const PhysicalParams p = default_params();
  CHECK(to_natural(3.0e-7, Kind::time, p) ==
        doctest::Approx(9.7720).epsilon(1e-4));
}

TEST_CASE("frequency and time are reciprocal units") {
  const PhysicalParams p = default_params();
  const double f_nat = to_natural(2.0e6, Kind::frequency, p);
  CHECK(f_nat == doctest::Approx(2.0e6 * 30.70e-9).epsilon(1e-12));
  CHECK(to_natural(1.0 / 2.0e6, Kind::time, p) ==
        doctest::Approx(1.0 / f_nat).epsilon(1e-12));
}

TEST_CASE("kind_from_string") {
  CHECK(kind_from_string("time") == Kind::time);
  CHECK(kind_from_string("length") == Kind::length);
  CHECK(kind_from_string("velocity") == Kind::velocity);
  CHECK(kind_from_string("frequency") == Kind::frequency);
  CHECK_THROWS_AS(kind_from_string("parsec"), std::invalid_argument);
}

}  // TEST_SUITE
