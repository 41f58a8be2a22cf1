#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "abshear/constants.hpp"
#include "abshear/errors.hpp"
#include "abshear/fields.hpp"
#include "abshear/geometry.hpp"
#include "abshear/numerics.hpp"

namespace abshear {

/// Which sign the speed difference carries. Direct evaluation of |v_theta1| - |v_theta2|
/// with Gamma = -(e/m) flux is positive for a positive flux; the closed-form
/// Gamma / (pi R) expression for the same difference has the opposite sign. Results
/// follow direct evaluation.
enum class SpeedDifferenceSign { direct_evaluation };

struct SpeedSample {
  double theta = 0.0;       ///< upper-half angle, radians
  double difference = 0.0;  ///< |v_theta(theta)| - |v_theta(2 pi - theta)|, m/s
};

struct PhaseResult {
  double delta_phi_numeric = 0.0;   ///< radians
  double delta_phi_analytic = 0.0;  ///< e flux / hbar
  std::vector<SpeedSample> speed_diff_trace;
  double asymmetry = 0.0;  ///< 2 e A_theta(R) / (m v0)
  double speed_diff_mean = 0.0;
  double speed_diff_rel_std = 0.0;
  SpeedDifferenceSign sign = SpeedDifferenceSign::direct_evaluation;
};

/// Speed shift at the surface from the circulation alone, |Gamma| / (2 pi R).
[[nodiscard]] inline double circulation_speed_at_R(const SolenoidConfig& cfg) {
  return std::abs(circulation_gamma(cfg)) / (two_pi * cfg.radius());
}

/// |v_theta(R, theta)| = |-2 v0 sin(theta) + Gamma / (2 pi R)|.
[[nodiscard]] inline double tangential_speed_at_R(double theta, const BeamConfig& beam,
                                                  const SolenoidConfig& cfg) {
  if (!std::isfinite(theta)) throw InvalidArgument("angle must be finite");
  return std::abs(-2.0 * beam.speed() * std::sin(theta) +
                  circulation_gamma(cfg) / (two_pi * cfg.radius()));
}

/// |v_theta1(theta)| - |v_theta2(2 pi - theta)| for an upper-half angle in (0, pi).
/// Evaluated as (u1^2 - u2^2) / (|u1| + |u2|) so the O(v0) parts cancel exactly instead
/// of through subtraction of two nearly equal speeds.
[[nodiscard]] inline double speed_difference(double theta_upper, const BeamConfig& beam,
                                             const SolenoidConfig& cfg) {
  if (!(theta_upper > 0.0 && theta_upper < pi))
    throw DomainError("speed difference is undefined at the leading and trailing edges");
  const double swirl = circulation_gamma(cfg) / (two_pi * cfg.radius());
  const double stream = 2.0 * beam.speed() * std::sin(theta_upper);
  const double upper = -stream + swirl;  // v_theta at theta
  const double lower = stream + swirl;   // v_theta at 2 pi - theta
  const double denom = std::abs(upper) + std::abs(lower);
  if (denom == 0.0) return 0.0;
  return (-2.0 * stream) * (2.0 * swirl) / denom;
}

[[nodiscard]] inline double ab_phase_analytic(const SolenoidConfig& cfg) {
  return codata.e * cfg.flux() / codata.hbar;
}

/// 2 e A_theta(R) / (m v0): fractional upper/lower peak-speed mismatch.
[[nodiscard]] inline double peak_velocity_asymmetry(const BeamConfig& beam, const SolenoidConfig& cfg) {
  if (!(beam.speed() > 0.0)) throw PreconditionError("asymmetry needs a non-zero beam speed");
  const double a_theta = cfg.flux() / (two_pi * cfg.radius());
  return 2.0 * codata.e * a_theta / (codata.m * beam.speed());
}

/// Upper-half angles strictly between the edges, from the leading edge (pi) toward the
/// trailing edge (0).
[[nodiscard]] inline std::vector<double> interior_angles(int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(pi - pi * k / (n + 1));
  return out;
}

/// Phase difference between the upper and lower paths at r = R:
///   dphi = R * pi * (m / hbar) * <|v_theta1| - |v_theta2|>.
/// Requires 2 v0 sin(theta) > |Gamma| / (2 pi R) at every sampled angle so that the
/// absolute values resolve the same way everywhere.
[[nodiscard]] inline PhaseResult ab_phase_numeric(const BeamConfig& beam, const SolenoidConfig& cfg,
                                                  int n_samples) {
  if (n_samples < 3) throw InvalidArgument("phase integration needs at least 3 samples");
  const double delta = circulation_speed_at_R(cfg);

  PhaseResult out;
  out.speed_diff_trace.reserve(static_cast<std::size_t>(n_samples));
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(n_samples));
  for (double theta : interior_angles(n_samples)) {
    if (!(2.0 * beam.speed() * std::sin(theta) > delta))
      throw PreconditionError("2 v0 sin(theta) <= circulation speed at theta = " +
                              std::to_string(theta) + " rad; speed difference is not constant");
    const double d = speed_difference(theta, beam, cfg);
    out.speed_diff_trace.push_back({theta, d});
    diffs.push_back(d);
  }

  out.speed_diff_mean = numerics::mean(diffs);
  const double sd = numerics::stddev(diffs);
  out.speed_diff_rel_std = out.speed_diff_mean == 0.0 ? (sd == 0.0 ? 0.0 : HUGE_VAL)
                                                      : sd / std::abs(out.speed_diff_mean);
  constexpr double traversed_angle = pi;
  out.delta_phi_numeric =
      cfg.radius() * traversed_angle * (codata.m / codata.hbar) * out.speed_diff_mean;
  out.delta_phi_analytic = ab_phase_analytic(cfg);
  out.asymmetry = peak_velocity_asymmetry(beam, cfg);
  return out;
}

}  // namespace abshear
