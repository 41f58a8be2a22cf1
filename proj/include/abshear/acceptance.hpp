#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "abshear/config.hpp"
#include "abshear/constants.hpp"
#include "abshear/decomposition.hpp"
#include "abshear/fields.hpp"
#include "abshear/figures.hpp"
#include "abshear/forces.hpp"
#include "abshear/numerics.hpp"
#include "abshear/phase.hpp"
#include "abshear/streamline.hpp"

namespace abshear {

struct Check {
  int criterion = 0;
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunReport {
  std::vector<Check> checks;

  [[nodiscard]] bool overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  [[nodiscard]] bool criterion_passed(int criterion) const {
    bool any = false;
    for (const auto& c : checks) {
      if (c.criterion != criterion) continue;
      any = true;
      if (!c.pass) return false;
    }
    return any;
  }

  /// |actual - expected| <= tol * |expected|
  void relative(int criterion, std::string name, double expected, double actual, double tol) {
    const bool ok = numerics::relative_error(actual, expected) <= tol;
    checks.push_back({criterion, std::move(name), expected, actual, tol, ok});
  }
  /// |actual - expected| <= tol
  void absolute(int criterion, std::string name, double expected, double actual, double tol) {
    checks.push_back({criterion, std::move(name), expected, actual, tol,
                      std::abs(actual - expected) <= tol});
  }
  void boolean(int criterion, std::string name, bool ok) {
    checks.push_back({criterion, std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, ok});
  }
};

inline void print_report(std::ostream& os, const RunReport& report) {
  os << "criterion,check,expected,actual,tolerance,result\n";
  for (const auto& c : report.checks) {
    os << c.criterion << ',' << c.name << ',' << sci9(c.expected) << ',' << sci9(c.actual) << ','
       << sci9(c.tolerance) << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  os << "overall = " << (report.overall() ? "PASS" : "FAIL") << '\n';
}

namespace detail {

/// a / scale, reading 0 / 0 as 0.
inline double scaled(double a, double scale) {
  if (a == 0.0) return 0.0;
  return scale == 0.0 ? HUGE_VAL : std::abs(a) / std::abs(scale);
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace detail

/// Runs every acceptance criterion against `run`. Expected values that depend on physical
/// constants are computed from `reference`, so a corrupted reference makes them fail.
[[nodiscard]] inline RunReport run_acceptance(const RunConfig& run,
                                              const PhysicalConstants& reference = codata,
                                              std::uint64_t seed = 20230203) {
  const SolenoidConfig& cfg = run.solenoid;
  const BeamConfig& beam = run.beam;
  const double R = cfg.radius();
  const double flux = cfg.flux();
  const double v0 = beam.speed();

  RunReport report;
  const auto guarded = [&report](int criterion, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      report.boolean(criterion, std::string("error: ") + ex.what(), false);
    }
  };

  // 1. Finite-difference shear against the closed form.
  guarded(1, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(1.5 * R, 50.0 * R);
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    double worst_shear = 0.0;
    double worst_div = 0.0;
    double worst_curl = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto p = FieldPoint::from_polar(radius(rng), angle(rng));
      const auto row = decompose_point(p, cfg, 1e-4);
      const double scale = std::abs(flux) / (two_pi * p.r() * p.r());
      worst_shear = std::max(worst_shear, numerics::relative_error(row.shear_mag, scale));
      worst_div = std::max(worst_div, detail::scaled(row.div, scale));
      worst_curl = std::max(worst_curl, detail::scaled(row.curl_z, scale));
    }
    report.absolute(1, "max rel shear error (1000 pts)", 0.0, worst_shear, 1e-5);
    report.absolute(1, "max |div| / shear scale", 0.0, worst_div, 1e-6);
    report.absolute(1, "max |curl_z| / shear scale", 0.0, worst_curl, 1e-6);
  });

  // 2. decompose -> recompose identity.
  guarded(2, [&] {
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      Jacobian3 jac;
      double norm = 0.0;
      for (auto& row : jac.entries)
        for (auto& v : row) {
          v = entry(rng);
          norm = std::max(norm, std::abs(v));
        }
      const auto back = recompose(decompose(jac));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          worst = std::max(worst, std::abs(back.entries[i][j] - jac.entries[i][j]) / norm);
    }
    report.absolute(2, "max rel round-trip error (1000 Jacobians)", 0.0, worst, 1e-12);
  });

  // 3. Impenetrability at the surface.
  guarded(3, [&] {
    double worst = 0.0;
    for (double theta : numerics::linspace(0.0, two_pi, 721)) {
      if (theta >= two_pi) continue;
      worst = std::max(worst, std::abs(velocity_field(FieldPoint::from_polar(R, theta), beam, cfg).vr));
    }
    report.absolute(3, "max |v_r(R, theta)| over 720 angles", 0.0, worst, 0.0);
  });

  // 4. Circulation recovered by line integrals at r = 2R.
  guarded(4, [&] {
    constexpr int n = 10000;
    const double r = 2.0 * R;
    const double dtheta = two_pi / n;
    double gamma_v = 0.0;
    double gamma_a = 0.0;
    for (int k = 0; k < n; ++k) {  // periodic trapezoid
      const auto p = FieldPoint::from_polar(r, k * dtheta);
      const double tx = -p.sin_theta() * r * dtheta;
      const double ty = p.cos_theta() * r * dtheta;
      const auto v = velocity_cartesian(p, beam, cfg);
      const auto a = vector_potential_cartesian(p, cfg);
      gamma_v += v.vx * tx + v.vy * ty;
      gamma_a += a.vx * tx + a.vy * ty;
    }
    report.relative(4, "loop integral of A = flux", flux, gamma_a, 1e-6);
    report.relative(4, "loop integral of v = -(e/m) flux", -reference.e / reference.m * flux,
                    gamma_v, 1e-6);
  });

  // 5. Leading-edge tangential force peaks at sqrt(2) R.
  guarded(5, [&] {
    const double r_peak = tangential_force_peak_radius(beam, cfg, 5.0 * R, 1e-10 * R);
    report.absolute(5, "argmax |F_theta(r, pi)| / R", std::sqrt(2.0), r_peak / R, 1e-6);
  });

  // 6. Longitudinal force averages to zero over a half.
  guarded(6, [&] {
    for (double u : {1.1, 2.0, 10.0}) {
      const double r = u * R;
      const double avg = angle_average_force(r, ForceAxis::x, 0.0, pi, 4097, beam, cfg);
      const double scale = reference.e * v0 * flux / (two_pi * r * r);
      report.absolute(6, "|<F_x>_[0,pi]| / scale at r/R = " + sci9(u), 0.0,
                      detail::scaled(avg, scale), 1e-12);
    }
  });

  // 7. Lateral force averages to e v0 (R/r)^2 flux / (2 pi r^2).
  guarded(7, [&] {
    const double r = 2.0 * R;
    const double avg = angle_average_force(r, ForceAxis::y, 0.0, pi, 4097, beam, cfg);
    const double expected = reference.e * v0 * (R * R / (r * r)) * flux / (two_pi * r * r);
    report.relative(7, "<F_y>_[0,pi] at r = 2R (N)", expected, avg, 1e-9);
    const auto sin2 = [](double t) { return std::sin(t) * std::sin(t); };
    const auto cos2 = [](double t) { return std::cos(t) * std::cos(t); };
    report.absolute(7, "<sin^2>_[0,pi]", 0.5, numerics::trapezoid_average(sin2, 0.0, pi, 4097), 1e-12);
    report.absolute(7, "<cos^2>_[0,pi]", 0.5, numerics::trapezoid_average(cos2, 0.0, pi, 4097), 1e-12);
  });

  // 8. Net lateral force over the annulus [R, 10R].
  guarded(8, [&] {
    const double r_max = 10.0 * R;
    const double net = net_lateral_force(r_max, 20001, 65, beam, cfg);
    const double expected = reference.e * v0 * flux * (1.0 - R * R / (r_max * r_max)) / 2.0;
    report.relative(8, "net lateral force to 10R (N m^2)", expected, net, 1e-6);
    report.boolean(8, "sign(net) == sign(flux)", detail::sign_of(net) == detail::sign_of(flux * v0));
    const double flipped = net_lateral_force(r_max, 20001, 65, beam, cfg.with_flux(-flux));
    report.relative(8, "net(-flux) == -net(flux)", -net, flipped, 1e-12);
  });

  // 9. Zero-lateral-force locus.
  guarded(9, [&] {
    report.absolute(9, "theta0(sqrt(2) R) (rad)", pi / 6.0, zero_force_angle(std::sqrt(2.0) * R, cfg),
                    1e-15);
    for (double u : {1.01, std::sqrt(2.0), 10.0}) {
      const double r = u * R;
      const auto f = force_cartesian(FieldPoint::from_polar(r, zero_force_angle(r, cfg)), beam, cfg);
      const double scale = reference.e * v0 * flux / (two_pi * r * r);
      report.absolute(9, "|F_y(theta0)| / scale at r/R = " + sci9(u), 0.0,
                      detail::scaled(f.f_y, scale), 1e-12);
    }
  });

  // 10. Semi-classical phase equals e flux / hbar and does not depend on v0.
  guarded(10, [&] {
    const auto result = ab_phase_numeric(beam, cfg, 1000);
    report.relative(10, "numeric phase vs e flux / hbar (rad)", reference.e * flux / reference.hbar,
                    result.delta_phi_numeric, 1e-9);
    const auto doubled = ab_phase_numeric(BeamConfig(2.0 * v0), cfg, 1000);
    report.relative(10, "phase with 2 v0 vs phase with v0", result.delta_phi_numeric,
                    doubled.delta_phi_numeric, 1e-12);
  });

  // 11. Speed difference is constant and equals e flux / (pi m R).
  guarded(11, [&] {
    const auto result = ab_phase_numeric(beam, cfg, 1000);
    report.absolute(11, "std / mean of speed difference", 0.0, result.speed_diff_rel_std, 1e-9);
    report.relative(11, "mean speed difference (m/s)", reference.e * flux / (pi * reference.m * R),
                    result.speed_diff_mean, 1e-9);
  });

  // 12. Peak-velocity asymmetry.
  guarded(12, [&] {
    const double expected = 2.0 * reference.e * (flux / (two_pi * R)) / (reference.m * v0);
    report.relative(12, "2 e A_theta(R) / (m v0)", expected, peak_velocity_asymmetry(beam, cfg), 1e-12);
  });

  // 13. Fore-aft symmetry of a flux-free streamline.
  guarded(13, [&] {
    const SolenoidConfig no_flux = cfg.with_flux(0.0);
    const auto start = FieldPoint::from_cartesian(-10.0 * R, 2.0 * R);
    const auto path = trace_streamline(start, 0.005 * R / v0, 1000000, beam, no_flux);
    const auto y_exit = crossing_y(path, 10.0 * R);
    report.boolean(13, "path reaches x = +10R", y_exit.has_value());
    if (y_exit) report.absolute(13, "|y(+10R) - y(-10R)| / R", 0.0, std::abs(*y_exit - start.y()) / R, 1e-3);
  });

  return report;
}

}  // namespace abshear
