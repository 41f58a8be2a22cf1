#pragma once

#include <cmath>
#include <string>

#include "abshear/constants.hpp"
#include "abshear/errors.hpp"

namespace abshear {

/// Magnetic flux through the solenoid and its radius.
class SolenoidConfig {
 public:
  static constexpr double default_flux = 1.0e-15;   // Wb
  static constexpr double default_radius = 1.0e-6;  // m

  SolenoidConfig() = default;
  SolenoidConfig(double flux_wb, double radius_m) : flux_(flux_wb), radius_(radius_m) {
    if (!std::isfinite(flux_wb)) throw InvalidArgument("solenoid flux must be finite");
    if (!std::isfinite(radius_m) || radius_m <= 0.0)
      throw InvalidArgument("solenoid radius must be finite and positive");
  }

  [[nodiscard]] double flux() const { return flux_; }
  [[nodiscard]] double radius() const { return radius_; }

  [[nodiscard]] SolenoidConfig with_flux(double flux_wb) const { return {flux_wb, radius_}; }

  friend bool operator==(const SolenoidConfig&, const SolenoidConfig&) = default;

 private:
  double flux_ = default_flux;
  double radius_ = default_radius;
};

/// Free-stream electron speed far from the solenoid.
class BeamConfig {
 public:
  static constexpr double default_speed = 6.0e7;  // m/s, ~10 keV

  BeamConfig() = default;
  explicit BeamConfig(double speed_mps) : speed_(speed_mps) {
    if (!std::isfinite(speed_mps) || speed_mps < 0.0)
      throw InvalidArgument("beam speed must be finite and non-negative");
  }

  [[nodiscard]] double speed() const { return speed_; }

  /// Non-relativistic kinetic energy, joules.
  [[nodiscard]] double kinetic_energy() const { return 0.5 * codata.m * speed_ * speed_; }

  friend bool operator==(const BeamConfig&, const BeamConfig&) = default;

 private:
  double speed_ = default_speed;
};

/// Maps any finite angle into [0, 2pi).
[[nodiscard]] inline double normalize_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return t + 0.0;  // folds -0.0 into +0.0
}

/// A position in the plane of the solenoid cross-section, held in both polar and
/// Cartesian form. theta is measured counter-clockwise from +x. At the origin theta is 0
/// by convention.
class FieldPoint {
 public:
  [[nodiscard]] static FieldPoint from_polar(double r, double theta) {
    if (!std::isfinite(r) || !std::isfinite(theta))
      throw InvalidArgument("polar coordinates must be finite");
    if (r < 0.0) throw InvalidArgument("radius must be non-negative");
    const double t = normalize_angle(theta);
    return FieldPoint(r, t, r * std::cos(t), r * std::sin(t));
  }

  [[nodiscard]] static FieldPoint from_cartesian(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw InvalidArgument("cartesian coordinates must be finite");
    const double r = std::hypot(x, y);
    const double t = (r == 0.0) ? 0.0 : normalize_angle(std::atan2(y, x));
    return FieldPoint(r, t, x, y);
  }

  [[nodiscard]] double r() const { return r_; }
  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] double x() const { return x_; }
  [[nodiscard]] double y() const { return y_; }

  // Direction cosines taken from the Cartesian pair so axis points stay exact.
  [[nodiscard]] double cos_theta() const { return r_ > 0.0 ? x_ / r_ : 1.0; }
  [[nodiscard]] double sin_theta() const { return r_ > 0.0 ? y_ / r_ : 0.0; }

 private:
  FieldPoint(double r, double theta, double x, double y) : r_(r), theta_(theta), x_(x), y_(y) {}

  double r_;
  double theta_;
  double x_;
  double y_;
};

/// True iff the point lies on or outside the solenoid surface.
[[nodiscard]] inline bool validate_outside(const FieldPoint& p, const SolenoidConfig& cfg) {
  return p.r() >= cfg.radius();
}

inline void require_outside(const FieldPoint& p, const SolenoidConfig& cfg) {
  if (!validate_outside(p, cfg))
    throw DomainError("point at r = " + std::to_string(p.r()) +
                      " m lies inside the solenoid (R = " + std::to_string(cfg.radius()) + " m)");
}

}  // namespace abshear
