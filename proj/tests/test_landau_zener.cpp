#include <cmath>
#include <random>

#include "darkstate/landau_zener.hpp"
#include "doctest.h"

using namespace darkstate;

namespace {

const PhysicalParams kParams = default_params();
const PulseShape kPulse = PulseShape::from_params(kParams);

}  // namespace

TEST_SUITE("landau_zener") {

TEST_CASE("single-node survival formula") {
  std::mt19937 gen(31);
  std::uniform_real_distribution<double> uh(0.0, 20.0);
  std::uniform_real_distribution<double> uv(1e-3, 0.1);
  for (int i = 0; i < 40; ++i) {
    const double h = uh(gen);
    const double v = uv(gen);
    CHECK(survival_single(h, v, kParams.g0) ==
          std::exp(-two_pi * h / (two_pi * v * kParams.g0)));
  }
  CHECK(survival_single(5.0, 0.0, kParams.g0) == 0.0);
  CHECK(survival_single(5.0, -0.01, kParams.g0) == 0.0);
  CHECK(survival_single(0.0, 0.05, kParams.g0) == 1.0);

  // At fixed h the exponent shrinks with axial speed.
  const double p1 = survival_single(3.0, 0.01, kParams.g0);
  const double p2 = survival_single(3.0, 0.02, kParams.g0);
  const double p3 = survival_single(3.0, 0.04, kParams.g0);
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  // And grows with h at fixed speed.
  CHECK(survival_single(6.0, 0.02, kParams.g0) <
        survival_single(3.0, 0.02, kParams.g0));
}

TEST_CASE("no crossing means certain survival") {
  const LzPrediction lz =
      predict(Trajectory::constant(0.005, 0.25), kPulse, kParams, 0.0, 20.0);
  CHECK(lz.per_node.empty());
  CHECK(lz.p_total == 1.0);
  CHECK(!lz.tangential_flag);
  CHECK(!lz.overlapping_flag);
}

TEST_CASE("single crossing landmark") {
  const LzPrediction lz =
      predict(Trajectory::constant(0.017, 0.25), kPulse, kParams, 0.0, 20.0);
  REQUIRE(lz.per_node.size() == 1);
  // Frozen from an independent evaluation of exp(-h*/(v*g0)) at the
  // bisected crossing time.
  CHECK(std::abs(lz.p_total - 0.946164) < 2e-6);
  CHECK(lz.p_total == lz.per_node[0].p_i);
  CHECK(lz.per_node[0].p_i ==
        survival_single(lz.per_node[0].h_star, lz.per_node[0].v_axial,
                        kParams.g0));
}

TEST_CASE("two crossings multiply") {
  const LzPrediction lz =
      predict(Trajectory::constant(0.055, 0.25), kPulse, kParams, 0.0, 20.0);
  REQUIRE(lz.per_node.size() == 2);
  CHECK(lz.p_total == lz.per_node[0].p_i * lz.per_node[1].p_i);
  CHECK(std::abs(lz.p_total - 0.884077) < 1e-5);
  CHECK(!lz.overlapping_flag);
  CHECK(!lz.tangential_flag);
}

TEST_CASE("tangential touch zeroes the prediction and is flagged") {
  const double om = 0.2;
  const LzPrediction lz = predict(Trajectory::harmonic(om * 0.25, 0.25, om),
                                  kPulse, kParams, 0.0, 20.0);
  CHECK(lz.tangential_flag);
  CHECK(lz.p_total == 0.0);
}

TEST_CASE("near-tangential pairs are flagged as overlapping") {
  // Turning point just past the node: two genuine crossings separated by
  // ~0.02, well under the 10/eps_max trust gap (~0.035).
  const double om = 0.2;
  const double amp = 0.25 / (1.0 - 2e-6);
  const LzPrediction lz = predict(Trajectory::harmonic(om * amp, 0.25, om),
                                  kPulse, kParams, 0.0, 20.0);
  REQUIRE(lz.per_node.size() == 2);
  CHECK(lz.overlapping_flag);
  CHECK(!lz.tangential_flag);
  CHECK(lz.per_node[1].t_star - lz.per_node[0].t_star < 0.035);
  CHECK(lz.per_node[0].v_axial > 0.0);
}

TEST_CASE("well-separated crossings are not flagged") {
  const LzPrediction lz =
      predict(Trajectory::constant(0.06, 0.25), kPulse, kParams, 0.0, 20.0);
  REQUIRE(lz.per_node.size() == 2);
  CHECK(!lz.overlapping_flag);
}

}  // TEST_SUITE
