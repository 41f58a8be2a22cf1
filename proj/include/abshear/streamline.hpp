#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "abshear/fields.hpp"
#include "abshear/geometry.hpp"

namespace abshear {

enum class StreamlineEnd {
  downstream,  ///< passed x = |x_start| on the downstream side
  max_steps,
  boundary,    ///< the next step would have entered the solenoid
};

struct StreamlinePath {
  std::vector<FieldPoint> points;
  double step = 0.0;  ///< seconds
  StreamlineEnd end = StreamlineEnd::max_steps;
};

/// Fixed-step RK4 integration of dx/dt = v(x) through the Laplace velocity field.
[[nodiscard]] inline StreamlinePath trace_streamline(const FieldPoint& start, double dt,
                                                     int max_steps, const BeamConfig& beam,
                                                     const SolenoidConfig& cfg) {
  require_outside(start, cfg);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
  if (max_steps < 0) throw InvalidArgument("max_steps must be non-negative");

  const double R = cfg.radius();
  const double x_exit = std::abs(start.x());
  // Returns nullopt when the sample point lies inside the solenoid.
  const auto velocity = [&](double x, double y) -> std::optional<CartesianVector> {
    const auto p = FieldPoint::from_cartesian(x, y);
    if (p.r() < R) return std::nullopt;
    return velocity_cartesian(p, beam, cfg);
  };

  StreamlinePath path;
  path.step = dt;
  path.points.reserve(static_cast<std::size_t>(std::min(max_steps, 100000)) + 1);
  path.points.push_back(start);

  double x = start.x();
  double y = start.y();
  for (int step = 0; step < max_steps; ++step) {
    const auto k1 = velocity(x, y);
    if (!k1) { path.end = StreamlineEnd::boundary; return path; }
    const auto k2 = velocity(x + 0.5 * dt * k1->vx, y + 0.5 * dt * k1->vy);
    if (!k2) { path.end = StreamlineEnd::boundary; return path; }
    const auto k3 = velocity(x + 0.5 * dt * k2->vx, y + 0.5 * dt * k2->vy);
    if (!k3) { path.end = StreamlineEnd::boundary; return path; }
    const auto k4 = velocity(x + dt * k3->vx, y + dt * k3->vy);
    if (!k4) { path.end = StreamlineEnd::boundary; return path; }

    const double nx = x + dt / 6.0 * (k1->vx + 2.0 * k2->vx + 2.0 * k3->vx + k4->vx);
    const double ny = y + dt / 6.0 * (k1->vy + 2.0 * k2->vy + 2.0 * k3->vy + k4->vy);
    const auto next = FieldPoint::from_cartesian(nx, ny);
    if (next.r() < R) { path.end = StreamlineEnd::boundary; return path; }

    path.points.push_back(next);
    x = nx;
    y = ny;
    if (x > x_exit) { path.end = StreamlineEnd::downstream; return path; }
  }
  path.end = StreamlineEnd::max_steps;
  return path;
}

/// Linearly interpolated y where the path first crosses the vertical line x = x_line
/// moving in +x, if it does.
[[nodiscard]] inline std::optional<double> crossing_y(const StreamlinePath& path, double x_line) {
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    const auto& a = path.points[i - 1];
    const auto& b = path.points[i];
    if (a.x() <= x_line && b.x() >= x_line && b.x() > a.x()) {
      const double t = (x_line - a.x()) / (b.x() - a.x());
      return a.y() + t * (b.y() - a.y());
    }
  }
  return std::nullopt;
}

/// Upper bound on the flow speed anywhere outside the solenoid: 2 v0 + |Gamma| / (2 pi R).
[[nodiscard]] inline double max_flow_speed(const BeamConfig& beam, const SolenoidConfig& cfg) {
  return 2.0 * beam.speed() + std::abs(circulation_gamma(cfg)) / (two_pi * cfg.radius());
}

}  // namespace abshear
