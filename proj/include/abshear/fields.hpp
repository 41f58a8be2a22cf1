#pragma once

#include <cmath>

#include "abshear/constants.hpp"
#include "abshear/geometry.hpp"

namespace abshear {

/// (radial, tangential) components. Units depend on the quantity: T m for the vector
/// potential, m/s for velocity, N for force.
struct PolarVector {
  double vr = 0.0;
  double vtheta = 0.0;
};

struct CartesianVector {
  double vx = 0.0;
  double vy = 0.0;
};

/// Whether the velocity-circulation term is kept. The force expressions of the model
/// drop it by default since it is ~1e-7 of the free-stream term at 10 keV.
enum class Circulation { included, neglected };

/// Rotates polar components at p into the solenoid's Cartesian frame.
[[nodiscard]] inline CartesianVector to_cartesian(const PolarVector& v, const FieldPoint& p) {
  const double c = p.cos_theta();
  const double s = p.sin_theta();
  return {v.vr * c - v.vtheta * s, v.vr * s + v.vtheta * c};
}

// ---------------------------------------------------------------------------
// Vector potential outside the solenoid (Coulomb gauge)
// ---------------------------------------------------------------------------

/// A = (0, flux / 2 pi r) in polar components.
[[nodiscard]] inline PolarVector vector_potential(const FieldPoint& p, const SolenoidConfig& cfg) {
  require_outside(p, cfg);
  return {0.0, cfg.flux() / (two_pi * p.r())};
}

/// A = flux / (2 pi r^2) (-y, x).
[[nodiscard]] inline CartesianVector vector_potential_cartesian(const FieldPoint& p,
                                                                const SolenoidConfig& cfg) {
  require_outside(p, cfg);
  const double k = cfg.flux() / (two_pi * p.r() * p.r());
  return {-k * p.y(), k * p.x()};
}

// ---------------------------------------------------------------------------
// Electron velocity field: potential flow past a cylinder with circulation
// ---------------------------------------------------------------------------

/// Velocity circulation around the solenoid, -(e/m) flux, in m^2/s. Negative for a
/// positive flux; this is the only place the circulation sign is decided.
[[nodiscard]] inline double circulation_gamma(const SolenoidConfig& cfg) {
  return -codata.charge_to_mass() * cfg.flux();
}

/// Scalar velocity potential, m^2/s. The circulation term is multivalued; theta is taken
/// on the [0, 2pi) branch.
[[nodiscard]] inline double velocity_potential(const FieldPoint& p, const BeamConfig& beam,
                                               const SolenoidConfig& cfg) {
  require_outside(p, cfg);
  const double R = cfg.radius();
  const double r = p.r();
  return beam.speed() * std::cos(p.theta()) * (r + R * R / r) +
         circulation_gamma(cfg) / two_pi * p.theta();
}

[[nodiscard]] inline PolarVector velocity_field(const FieldPoint& p, const BeamConfig& beam,
                                                const SolenoidConfig& cfg,
                                                Circulation circ = Circulation::included) {
  require_outside(p, cfg);
  const double q = cfg.radius() / p.r();
  const double q2 = q * q;
  const double v0 = beam.speed();
  const double swirl =
      circ == Circulation::included ? circulation_gamma(cfg) / (two_pi * p.r()) : 0.0;
  return {v0 * p.cos_theta() * (1.0 - q2), -v0 * p.sin_theta() * (1.0 + q2) + swirl};
}

[[nodiscard]] inline CartesianVector velocity_cartesian(const FieldPoint& p, const BeamConfig& beam,
                                                        const SolenoidConfig& cfg,
                                                        Circulation circ = Circulation::included) {
  return to_cartesian(velocity_field(p, beam, cfg, circ), p);
}

}  // namespace abshear
