#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "abshear/decomposition.hpp"
#include "abshear/forces.hpp"
#include "abshear/numerics.hpp"
#include "abshear/phase.hpp"
#include "abshear/streamline.hpp"

namespace abshear {

/// Scientific notation, 9 significant digits.
[[nodiscard]] inline std::string sci9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

struct FigureOptions {
  int samples = 0;               ///< 0 selects the per-figure default
  double r_max_over_R = 10.0;
  double streamline_dt = 0.01;   ///< in units of R / v0
  int streamline_max_steps = 5000;
};

namespace detail {

inline double leading_edge_scale(const BeamConfig& beam, const SolenoidConfig& cfg) {
  const double R = cfg.radius();
  const double scale = codata.e * beam.speed() * cfg.flux() / (two_pi * R * R);
  if (scale == 0.0) throw PreconditionError("force normalisation e v0 flux / (2 pi R^2) is zero");
  return scale;
}

inline std::vector<double> radial_grid(const FigureOptions& opt) {
  if (!(opt.r_max_over_R > 1.0)) throw InvalidArgument("r_max must exceed R");
  return numerics::logspace(1.0, opt.r_max_over_R, opt.samples > 0 ? opt.samples : 400);
}

}  // namespace detail

/// F_theta(r, pi) normalised by e v0 flux / (2 pi R^2).
inline void write_fig3a(std::ostream& os, const BeamConfig& beam, const SolenoidConfig& cfg,
                        const FigureOptions& opt = {}) {
  const double scale = detail::leading_edge_scale(beam, cfg);
  os << "r_over_R,f_theta_norm\n";
  for (double u : detail::radial_grid(opt)) {
    const auto p = FieldPoint::from_polar(u * cfg.radius(), pi);
    os << sci9(u) << ',' << sci9(force_tangential(p, beam, cfg) / scale) << '\n';
  }
}

/// F_r(r, pi/2) with the circulation neglected, same normalisation.
inline void write_fig3b(std::ostream& os, const BeamConfig& beam, const SolenoidConfig& cfg,
                        const FigureOptions& opt = {}) {
  const double scale = detail::leading_edge_scale(beam, cfg);
  os << "r_over_R,f_r_norm\n";
  for (double u : detail::radial_grid(opt)) {
    const auto p = FieldPoint::from_polar(u * cfg.radius(), 0.5 * pi);
    os << sci9(u) << ',' << sci9(force_radial(p, beam, cfg, Circulation::neglected) / scale) << '\n';
  }
}

inline void write_figB1(std::ostream& os, const SolenoidConfig& cfg, const FigureOptions& opt = {}) {
  os << "r_over_R,theta0_deg\n";
  for (double u : detail::radial_grid(opt)) {
    os << sci9(u) << ',' << sci9(zero_force_angle(u * cfg.radius(), cfg) * 180.0 / pi) << '\n';
  }
}

/// Surface velocity on the upper (theta) and mirrored lower (360 - theta) halves.
inline void write_figC1(std::ostream& os, const BeamConfig& beam, const SolenoidConfig& cfg,
                        const FigureOptions& opt = {}) {
  const double v0 = beam.speed();
  if (!(v0 > 0.0)) throw PreconditionError("figC1 normalisation needs a non-zero beam speed");
  const int n = opt.samples > 0 ? opt.samples : 720;
  os << "theta_deg,vx_upper_norm,vx_lower_norm,vtheta_upper_mps,vtheta_lower_mps\n";
  for (double deg : numerics::linspace(0.0, 180.0, n)) {
    const double theta = deg * pi / 180.0;
    const auto upper = FieldPoint::from_polar(cfg.radius(), theta);
    const auto lower = FieldPoint::from_polar(cfg.radius(), two_pi - theta);
    const auto vu = velocity_field(upper, beam, cfg);
    const auto vl = velocity_field(lower, beam, cfg);
    os << sci9(deg) << ',' << sci9(to_cartesian(vu, upper).vx / v0) << ','
       << sci9(to_cartesian(vl, lower).vx / v0) << ',' << sci9(vu.vtheta) << ','
       << sci9(vl.vtheta) << '\n';
  }
}

/// Eleven streamlines seeded at x = -10 R, y = -5 R ... 5 R.
inline void write_streamlines(std::ostream& os, const BeamConfig& beam, const SolenoidConfig& cfg,
                              const FigureOptions& opt = {}) {
  if (!(beam.speed() > 0.0)) throw PreconditionError("streamline step needs a non-zero beam speed");
  const double R = cfg.radius();
  const double dt = opt.streamline_dt * R / beam.speed();
  os << "path_id,step,x_m,y_m\n";
  for (int id = 0; id <= 10; ++id) {
    const auto start = FieldPoint::from_cartesian(-10.0 * R, (id - 5) * R);
    const auto path = trace_streamline(start, dt, opt.streamline_max_steps, beam, cfg);
    for (std::size_t k = 0; k < path.points.size(); ++k) {
      os << id << ',' << k << ',' << sci9(path.points[k].x()) << ',' << sci9(path.points[k].y())
         << '\n';
    }
  }
}

inline void write_grid(std::ostream& os, const GridResult& grid) {
  os << "x_m,y_m,div,curl_z,sigma_xx,sigma_xy,sigma_yy,shear_mag,shear_mag_analytic\n";
  for (const auto& row : grid.rows) {
    os << sci9(row.x) << ',' << sci9(row.y) << ',' << sci9(row.div) << ',' << sci9(row.curl_z)
       << ',' << sci9(row.sigma_xx) << ',' << sci9(row.sigma_xy) << ',' << sci9(row.sigma_yy)
       << ',' << sci9(row.shear_mag) << ',' << sci9(row.shear_mag_analytic) << '\n';
  }
}

}  // namespace abshear
