#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "abshear/phase.hpp"

using namespace abshear;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const SolenoidConfig defaults;
const BeamConfig beam;
constexpr double R = 1e-6;

// Frozen from 30-digit evaluations with CODATA 2018 constants.
constexpr double kSwirl = 27.9924898723330412;          // e flux / (2 pi m R), m/s
constexpr double kSpeedDiff = 55.9849797446660825;      // e flux / (pi m R), m/s
constexpr double kPhase = 1.51926744880951052;          // e flux / hbar, rad
constexpr double kAsymmetry = 9.33082995744434708e-7;   // 2 e A_theta(R) / (m v0)

}  // namespace

TEST_CASE("tangential_speed_at_R", "[phase]") {
  CHECK_THAT(tangential_speed_at_R(pi / 2, beam, defaults), WithinRel(1.2e8 + kSwirl, 1e-15));
  CHECK_THAT(tangential_speed_at_R(3 * pi / 2, beam, defaults), WithinRel(1.2e8 - kSwirl, 1e-15));
  for (double theta : {0.3, 1.9, 4.0}) {
    CHECK(tangential_speed_at_R(theta, beam, defaults.with_flux(0.0)) == std::abs(2 * 6e7 * std::sin(theta)));
  }
}

TEST_CASE("speed_difference", "[phase]") {
  CHECK_THAT(speed_difference(pi / 2, beam, defaults), WithinRel(kSpeedDiff, 1e-12));
  CHECK_THAT(speed_difference(pi / 4, beam, defaults), WithinRel(kSpeedDiff, 1e-12));
  CHECK(speed_difference(1.0, beam, defaults.with_flux(0.0)) == 0.0);
  CHECK_THROWS_AS(speed_difference(0.0, beam, defaults), DomainError);
  CHECK_THROWS_AS(speed_difference(pi, beam, defaults), DomainError);
  CHECK_THROWS_AS(speed_difference(4.0, beam, defaults), DomainError);
}

TEST_CASE("speed_difference agrees with direct subtraction of surface speeds", "[phase]") {
  for (double theta : {0.1, 0.8, pi / 2, 2.5, 3.0}) {
    const double direct = tangential_speed_at_R(theta, beam, defaults) -
                          tangential_speed_at_R(two_pi - theta, beam, defaults);
    // direct subtraction of ~1.2e8 m/s values keeps ~1e-8 m/s absolute accuracy
    CHECK_THAT(speed_difference(theta, beam, defaults), WithinAbs(direct, 1e-7));
  }
}

TEST_CASE("ab_phase_analytic", "[phase]") {
  CHECK_THAT(ab_phase_analytic(defaults), WithinRel(kPhase, 1e-14));
  CHECK(ab_phase_analytic(defaults.with_flux(0.0)) == 0.0);
  CHECK(ab_phase_analytic(defaults.with_flux(2e-15)) == 2 * ab_phase_analytic(defaults));
}

TEST_CASE("ab_phase_numeric", "[phase]") {
  const auto result = ab_phase_numeric(beam, defaults, 1000);
  CHECK_THAT(result.delta_phi_numeric, WithinRel(kPhase, 1e-9));
  CHECK_THAT(result.delta_phi_numeric, WithinAbs(1.51926, 1e-5));
  CHECK(result.delta_phi_analytic == ab_phase_analytic(defaults));
  CHECK(result.speed_diff_trace.size() == 1000);
  CHECK(result.speed_diff_rel_std <= 1e-9);
  CHECK_THAT(result.asymmetry, WithinRel(kAsymmetry, 1e-12));
  for (const auto& s : result.speed_diff_trace) {
    REQUIRE(s.theta > 0.0);
    REQUIRE(s.theta < pi);
  }
  // traced from the leading edge toward the trailing edge
  CHECK(result.speed_diff_trace.front().theta > result.speed_diff_trace.back().theta);

  const auto zero = ab_phase_numeric(beam, defaults.with_flux(0.0), 100);
  CHECK(zero.delta_phi_numeric == 0.0);
  CHECK(zero.speed_diff_rel_std == 0.0);

  const auto fast = ab_phase_numeric(BeamConfig(1.2e8), defaults, 1000);
  CHECK_THAT(fast.delta_phi_numeric, WithinRel(result.delta_phi_numeric, 1e-12));

  const auto reversed = ab_phase_numeric(beam, defaults.with_flux(-1e-15), 1000);
  CHECK_THAT(reversed.delta_phi_numeric, WithinRel(-kPhase, 1e-9));
}

TEST_CASE("phase preconditions", "[phase]") {
  CHECK_THROWS_AS(ab_phase_numeric(beam, defaults, 2), InvalidArgument);
  // 2 v0 = 20 m/s is below the 28 m/s circulation speed
  CHECK_THROWS_AS(ab_phase_numeric(BeamConfig(10.0), defaults, 100), PreconditionError);
  CHECK_THROWS_AS(ab_phase_numeric(BeamConfig(0.0), defaults.with_flux(0.0), 100), PreconditionError);
  CHECK_THROWS_AS(peak_velocity_asymmetry(BeamConfig(0.0), defaults), PreconditionError);
}

TEST_CASE("peak_velocity_asymmetry", "[phase]") {
  const double a = peak_velocity_asymmetry(beam, defaults);
  CHECK_THAT(a, WithinRel(kAsymmetry, 1e-12));
  CHECK(std::lround(std::log10(a)) == -6);
  CHECK(peak_velocity_asymmetry(beam, defaults.with_flux(0.0)) == 0.0);
  CHECK_THAT(peak_velocity_asymmetry(beam, SolenoidConfig(1e-15, 2 * R)), WithinRel(a / 2, 1e-14));
}

TEST_CASE("numeric phase equals e flux / hbar across the parameter box", "[phase][property]") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> log_flux(-20.0, -12.0);
  std::uniform_real_distribution<double> log_radius(-7.0, -4.0);
  std::uniform_real_distribution<double> log_speed(6.0, 8.0);
  constexpr int n = 200;
  const double min_sin = std::sin(pi / (n + 1));
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    const SolenoidConfig cfg(std::pow(10.0, log_flux(rng)), std::pow(10.0, log_radius(rng)));
    const BeamConfig b(std::pow(10.0, log_speed(rng)));
    // keep only draws where the constancy precondition holds at every sample
    if (!(2 * b.speed() * min_sin > circulation_speed_at_R(cfg))) continue;
    ++tested;
    const auto result = ab_phase_numeric(b, cfg, n);
    REQUIRE_THAT(result.delta_phi_numeric, WithinRel(result.delta_phi_analytic, 1e-9));
    REQUIRE(result.speed_diff_rel_std <= 1e-9);
    // m dv = e dA with |dA| = 2 A_theta(R) = flux / (pi R)
    REQUIRE_THAT(codata.m * result.speed_diff_mean, WithinRel(codata.e * cfg.flux() / (pi * cfg.radius()), 1e-12));
  }
  CHECK(tested > 200);
}

TEST_CASE("surface speed profiles mirror without flux and split by 2 delta with it", "[phase]") {
  for (double theta : {0.2, 1.0, 2.0, 3.0}) {
    CHECK_THAT(tangential_speed_at_R(theta, beam, defaults.with_flux(0.0)),
               WithinRel(tangential_speed_at_R(two_pi - theta, beam, defaults.with_flux(0.0)), 1e-14));
    const double split = tangential_speed_at_R(theta, beam, defaults) -
                         tangential_speed_at_R(two_pi - theta, beam, defaults);
    CHECK_THAT(split, WithinAbs(2 * kSwirl, 1e-7));
  }
}
