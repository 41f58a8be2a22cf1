#pragma once

#include <cmath>

#include "abshear/constants.hpp"
#include "abshear/decomposition.hpp"
#include "abshear/fields.hpp"
#include "abshear/geometry.hpp"
#include "abshear/numerics.hpp"

namespace abshear {

/// Force on the electron at one point, in polar and Cartesian components (newtons).
struct ForceSample {
  double f_r = 0.0;
  double f_theta = 0.0;
  double f_x = 0.0;
  double f_y = 0.0;
  FieldPoint at = FieldPoint::from_cartesian(0.0, 0.0);
};

/// The AB shear tensor has a single independent entry, sigma_r_theta = sigma_theta_r.
struct ShearTensorAB {
  double sigma_rtheta = 0.0;  ///< tesla

  [[nodiscard]] static ShearTensorAB at(double r, const SolenoidConfig& cfg) {
    return {shear_rtheta_analytic(r, cfg)};
  }
};

/// (v . grad) A for A = A_theta(r) theta_hat:
///   r_hat:     -v_theta A_theta / r
///   theta_hat:  v_r dA_theta/dr
/// Units T m / s. The force on the electron is e times this vector.
[[nodiscard]] inline PolarVector convective_derivative(const FieldPoint& p, const BeamConfig& beam,
                                                       const SolenoidConfig& cfg,
                                                       Circulation circ = Circulation::included) {
  const PolarVector v = velocity_field(p, beam, cfg, circ);
  const double a_theta = vector_potential(p, cfg).vtheta;
  const double da_dr = -cfg.flux() / (two_pi * p.r() * p.r());
  return {-v.vtheta * a_theta / p.r(), v.vr * da_dr};
}

/// Tangential shear force, -e v0 cos(theta) (1 - R^2/r^2) flux / (2 pi r^2).
[[nodiscard]] inline double force_tangential(const FieldPoint& p, const BeamConfig& beam,
                                             const SolenoidConfig& cfg) {
  require_outside(p, cfg);
  const double q = cfg.radius() / p.r();
  return -codata.e * beam.speed() * p.cos_theta() * (1.0 - q * q) * cfg.flux() /
         (two_pi * p.r() * p.r());
}

/// Radial (centripetal) force, -e v_theta A_theta / r.
[[nodiscard]] inline double force_radial(const FieldPoint& p, const BeamConfig& beam,
                                         const SolenoidConfig& cfg,
                                         Circulation circ = Circulation::included) {
  const double v_theta = velocity_field(p, beam, cfg, circ).vtheta;
  const double a_theta = vector_potential(p, cfg).vtheta;
  return -codata.e * v_theta * a_theta / p.r();
}

/// F = e v . sigma_AB: F_r = e v_theta sigma_theta_r, F_theta = e v_r sigma_r_theta.
[[nodiscard]] inline PolarVector force_from_shear_tensor(const PolarVector& v,
                                                         const ShearTensorAB& sigma) {
  return {codata.e * v.vtheta * sigma.sigma_rtheta, codata.e * v.vr * sigma.sigma_rtheta};
}

/// Polar and Cartesian force components. With the circulation neglected (the model's
/// approximation) f_x and f_y come from the closed forms
///   F_x = 2 e v0 sin cos flux/(2 pi r^2)
///   F_y = e v0 [sin^2 (1 + R^2/r^2) - cos^2 (1 - R^2/r^2)] flux/(2 pi r^2);
/// with it included they are the exact rotation of (f_r, f_theta).
[[nodiscard]] inline ForceSample force_cartesian(const FieldPoint& p, const BeamConfig& beam,
                                                 const SolenoidConfig& cfg,
                                                 Circulation circ = Circulation::neglected) {
  ForceSample out{force_radial(p, beam, cfg, circ), force_tangential(p, beam, cfg), 0.0, 0.0, p};
  if (circ == Circulation::included) {
    const auto rotated = to_cartesian({out.f_r, out.f_theta}, p);
    out.f_x = rotated.vx;
    out.f_y = rotated.vy;
    return out;
  }
  const double s = p.sin_theta();
  const double c = p.cos_theta();
  const double q = cfg.radius() / p.r();
  const double scale = codata.e * beam.speed() * cfg.flux() / (two_pi * p.r() * p.r());
  out.f_x = 2.0 * s * c * scale;
  out.f_y = (s * s * (1.0 + q * q) - c * c * (1.0 - q * q)) * scale;
  return out;
}

/// Angle in [0, pi/4] where the lateral force vanishes:
/// tan^2(theta0) = (1 - R^2/r^2) / (1 + R^2/r^2).
[[nodiscard]] inline double zero_force_angle(double r, const SolenoidConfig& cfg) {
  if (!(r >= cfg.radius())) throw DomainError("zero-force angle requested inside the solenoid");
  const double q = cfg.radius() / r;
  return std::atan(std::sqrt((1.0 - q * q) / (1.0 + q * q)));
}

enum class ForceAxis { x, y };

/// Trapezoid average of F_x or F_y (circulation neglected) over [theta_lo, theta_hi].
[[nodiscard]] inline double angle_average_force(double r, ForceAxis axis, double theta_lo,
                                                double theta_hi, int n, const BeamConfig& beam,
                                                const SolenoidConfig& cfg) {
  if (!(r >= cfg.radius())) throw DomainError("angle average requested inside the solenoid");
  if (n < 2) throw InvalidArgument("angle average needs n >= 2");
  const auto component = [&](double theta) {
    const auto f = force_cartesian(FieldPoint::from_polar(r, theta), beam, cfg);
    return axis == ForceAxis::x ? f.f_x : f.f_y;
  };
  return numerics::trapezoid_average(component, theta_lo, theta_hi, n);
}

/// Integral of F_y r dr dtheta over the annulus [R, r_max] x [0, 2 pi], in N m^2.
/// Trapezoid in both directions; the periodic angular direction converges spectrally so
/// n_theta can stay small while n_r carries the accuracy.
[[nodiscard]] inline double net_lateral_force(double r_max, int n_r, int n_theta,
                                              const BeamConfig& beam, const SolenoidConfig& cfg) {
  if (!(r_max > cfg.radius())) throw InvalidArgument("r_max must exceed the solenoid radius");
  if (n_r < 2 || n_theta < 2) throw InvalidArgument("net lateral force needs >= 2 samples per axis");
  const auto ring = [&](double r) {
    const auto f_y = [&](double theta) {
      return force_cartesian(FieldPoint::from_polar(r, theta), beam, cfg).f_y;
    };
    return numerics::trapezoid(f_y, 0.0, two_pi, n_theta) * r;
  };
  return numerics::trapezoid(ring, cfg.radius(), r_max, n_r);
}

/// Radius in [R, r_hi] where |F_theta| at the leading edge (theta = pi) peaks.
[[nodiscard]] inline double tangential_force_peak_radius(const BeamConfig& beam,
                                                         const SolenoidConfig& cfg, double r_hi,
                                                         double tol) {
  const double R = cfg.radius();
  const auto magnitude = [&](double r_over_R) {
    return std::abs(force_tangential(FieldPoint::from_polar(r_over_R * R, pi), beam, cfg));
  };
  return R * numerics::golden_section_maximize(magnitude, 1.0, r_hi / R, tol / R);
}

}  // namespace abshear
