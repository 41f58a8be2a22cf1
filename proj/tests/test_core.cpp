#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "abshear/constants.hpp"
#include "abshear/geometry.hpp"

using namespace abshear;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("CODATA constants are compiled in bit-exact", "[core]") {
  STATIC_REQUIRE(codata.e == 1.602176634e-19);
  STATIC_REQUIRE(codata.m == 9.1093837015e-31);
  STATIC_REQUIRE(codata.hbar == 1.054571817e-34);
  STATIC_REQUIRE(codata.e > 0 && codata.m > 0 && codata.hbar > 0);
}

TEST_CASE("point_from_polar", "[core]") {
  SECTION("axis points") {
    const auto a = FieldPoint::from_polar(1e-6, pi);
    CHECK(a.x() == -1e-6);
    CHECK_THAT(a.y(), WithinAbs(0.0, 1e-21));
    const auto b = FieldPoint::from_polar(2e-6, pi / 2);
    CHECK_THAT(b.x(), WithinAbs(0.0, 1e-21));
    CHECK(b.y() == 2e-6);
  }
  SECTION("theta is normalised into [0, 2 pi)") {
    CHECK_THAT(FieldPoint::from_polar(1e-6, 5 * pi / 2).theta(), WithinRel(pi / 2, 1e-15));
    CHECK_THAT(FieldPoint::from_polar(1e-6, -pi / 2).theta(), WithinRel(3 * pi / 2, 1e-15));
    CHECK(FieldPoint::from_polar(1e-6, two_pi).theta() == 0.0);
  }
  SECTION("rejects bad input") {
    CHECK_THROWS_AS(FieldPoint::from_polar(NAN, 0.0), InvalidArgument);
    CHECK_THROWS_AS(FieldPoint::from_polar(1.0, INFINITY), InvalidArgument);
    CHECK_THROWS_AS(FieldPoint::from_polar(-1.0, 0.0), InvalidArgument);
  }
}

TEST_CASE("point_from_cartesian", "[core]") {
  const auto origin = FieldPoint::from_cartesian(0.0, 0.0);
  CHECK(origin.r() == 0.0);
  CHECK(origin.theta() == 0.0);

  const auto neg = FieldPoint::from_cartesian(-1e-6, 0.0);
  CHECK(neg.r() == 1e-6);
  CHECK(neg.theta() == pi);

  const auto diag = FieldPoint::from_cartesian(1e-6, 1e-6);
  CHECK_THAT(diag.r(), WithinRel(std::sqrt(2.0) * 1e-6, 1e-15));
  CHECK_THAT(diag.theta(), WithinRel(pi / 4, 1e-15));

  CHECK(FieldPoint::from_cartesian(1e-6, -0.0).theta() == 0.0);
  CHECK_THROWS_AS(FieldPoint::from_cartesian(NAN, 0.0), InvalidArgument);
}

TEST_CASE("validate_outside includes the surface", "[core]") {
  const SolenoidConfig cfg;
  const double R = cfg.radius();
  CHECK(validate_outside(FieldPoint::from_polar(R, 1.0), cfg));
  CHECK_FALSE(validate_outside(FieldPoint::from_polar(0.5 * R, 1.0), cfg));
  CHECK(validate_outside(FieldPoint::from_polar(10 * R, 1.0), cfg));
  CHECK_THROWS_AS(require_outside(FieldPoint::from_polar(0.5 * R, 1.0), cfg), DomainError);
}

TEST_CASE("configs validate their invariants", "[core]") {
  CHECK_NOTHROW(SolenoidConfig(-1e-15, 1e-6));
  CHECK_NOTHROW(SolenoidConfig(0.0, 1e-6));
  CHECK_THROWS_AS(SolenoidConfig(1e-15, 0.0), InvalidArgument);
  CHECK_THROWS_AS(SolenoidConfig(INFINITY, 1e-6), InvalidArgument);
  CHECK_THROWS_AS(BeamConfig(-1.0), InvalidArgument);
  CHECK_NOTHROW(BeamConfig(0.0));
  // 6e7 m/s is ~10 keV non-relativistically
  CHECK_THAT(BeamConfig().kinetic_energy() / codata.e, WithinRel(10235.0, 1e-3));
}

TEST_CASE("polar/cartesian round trip over random points", "[core][property]") {
  const double R = 1e-6;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(R, 100 * R);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  for (int i = 0; i < 10000; ++i) {
    const auto p = FieldPoint::from_polar(radius(rng), angle(rng));
    const auto q = FieldPoint::from_cartesian(p.x(), p.y());
    REQUIRE_THAT(q.r(), WithinRel(p.r(), 1e-12));
    // compare on the circle so 0 and 2 pi - eps count as neighbours
    const double dtheta = std::remainder(q.theta() - p.theta(), two_pi);
    REQUIRE(std::abs(dtheta) <= 1e-12 * std::max(1.0, p.theta()));
    REQUIRE(q.theta() >= 0.0);
    REQUIRE(q.theta() < two_pi);
  }
}

TEST_CASE("angle normalisation is idempotent", "[core][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const double once = normalize_angle(angle(rng));
    REQUIRE(normalize_angle(once) == once);
    REQUIRE(once >= 0.0);
    REQUIRE(once < two_pi);
  }
}
