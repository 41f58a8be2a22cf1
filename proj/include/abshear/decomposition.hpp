#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "abshear/errors.hpp"
#include "abshear/fields.hpp"
#include "abshear/geometry.hpp"

namespace abshear {

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Vector3 = std::array<double, 3>;

/// entries[i][j] = dA_i / dx_j. Planar fields occupy the upper-left 2x2 block.
struct Jacobian3 {
  Matrix3 entries{};
};

/// Gradient split into a symmetric traceless shear, the curl, and the divergence.
struct GradientDecomposition {
  Matrix3 shear{};
  Vector3 curl{};
  double divergence = 0.0;
};

namespace detail {

/// Levi-Civita symbol for indices in {0, 1, 2}.
constexpr double levi_civita(int i, int j, int k) {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

}  // namespace detail

[[nodiscard]] inline GradientDecomposition decompose(const Jacobian3& jac) {
  const auto& J = jac.entries;
  GradientDecomposition d;
  d.divergence = J[0][0] + J[1][1] + J[2][2];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      d.shear[i][j] = 0.5 * (J[i][j] + J[j][i]) - (i == j ? d.divergence / 3.0 : 0.0);
    }
  }
  // curl_k = eps_kij d_i A_j = eps_kij J[j][i]
  for (int k = 0; k < 3; ++k) {
    double c = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c += detail::levi_civita(k, i, j) * J[j][i];
    d.curl[k] = c;
  }
  return d;
}

/// Inverse of decompose: J_ij = shear_ij - 1/2 eps_ijk curl_k + 1/3 delta_ij div.
[[nodiscard]] inline Jacobian3 recompose(const GradientDecomposition& d) {
  Jacobian3 jac;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double rot = 0.0;
      for (int k = 0; k < 3; ++k) rot += detail::levi_civita(i, j, k) * d.curl[k];
      jac.entries[i][j] = d.shear[i][j] - 0.5 * rot + (i == j ? d.divergence / 3.0 : 0.0);
    }
  }
  return jac;
}

/// Closed-form gradient of the Cartesian vector potential at p.
[[nodiscard]] inline Jacobian3 vector_potential_jacobian(const FieldPoint& p,
                                                         const SolenoidConfig& cfg) {
  require_outside(p, cfg);
  const double k = cfg.flux() / two_pi;
  const double x = p.x();
  const double y = p.y();
  const double r2 = x * x + y * y;
  const double r4 = r2 * r2;
  Jacobian3 jac;
  jac.entries[0][0] = 2.0 * k * x * y / r4;
  jac.entries[0][1] = k * (y * y - x * x) / r4;
  jac.entries[1][0] = k * (y * y - x * x) / r4;
  jac.entries[1][1] = -2.0 * k * x * y / r4;
  return jac;
}

/// Second-order central-difference Jacobian of a planar field. Any stencil point closer
/// to the origin than `exclusion_radius` is rejected with DomainError.
template <typename Field>
[[nodiscard]] Jacobian3 jacobian_fd(Field&& field, const FieldPoint& p, double h,
                                    double exclusion_radius = 0.0) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("finite-difference step must be positive");
  const std::array<FieldPoint, 4> stencil{
      FieldPoint::from_cartesian(p.x() + h, p.y()),
      FieldPoint::from_cartesian(p.x() - h, p.y()),
      FieldPoint::from_cartesian(p.x(), p.y() + h),
      FieldPoint::from_cartesian(p.x(), p.y() - h),
  };
  for (const auto& q : stencil) {
    if (q.r() < exclusion_radius)
      throw DomainError("finite-difference stencil crosses the excluded disk");
  }
  const CartesianVector xp = field(stencil[0]);
  const CartesianVector xm = field(stencil[1]);
  const CartesianVector yp = field(stencil[2]);
  const CartesianVector ym = field(stencil[3]);
  const double inv = 1.0 / (2.0 * h);
  Jacobian3 jac;
  jac.entries[0][0] = (xp.vx - xm.vx) * inv;
  jac.entries[0][1] = (yp.vx - ym.vx) * inv;
  jac.entries[1][0] = (xp.vy - xm.vy) * inv;
  jac.entries[1][1] = (yp.vy - ym.vy) * inv;
  return jac;
}

/// sigma_r_theta = 1/2 (dA_theta/dr - A_theta/r) = -flux / (2 pi r^2), tesla.
[[nodiscard]] inline double shear_rtheta_analytic(double r, const SolenoidConfig& cfg) {
  if (!(r >= cfg.radius())) throw DomainError("shear requested inside the solenoid");
  return -cfg.flux() / (two_pi * r * r);
}

/// In-plane principal shear, sqrt(s_xy^2 + ((s_xx - s_yy)/2)^2). Rotation invariant.
[[nodiscard]] inline double shear_invariant_magnitude(const GradientDecomposition& d) {
  const double half_diff = 0.5 * (d.shear[0][0] - d.shear[1][1]);
  return std::hypot(d.shear[0][1], half_diff);
}

// ---------------------------------------------------------------------------
// Grid sweep
// ---------------------------------------------------------------------------

struct GridSpec {
  double x_min = -5.0e-6;
  double x_max = 5.0e-6;
  double y_min = -5.0e-6;
  double y_max = 5.0e-6;
  int n = 101;                  ///< points per axis; n = 1 evaluates (x_min, y_min) only
  double relative_step = 1e-4;  ///< h = relative_step * r at each point
};

struct GridRow {
  double x = 0.0;
  double y = 0.0;
  double div = 0.0;
  double curl_z = 0.0;
  double sigma_xx = 0.0;
  double sigma_xy = 0.0;
  double sigma_yy = 0.0;
  double shear_mag = 0.0;
  double shear_mag_analytic = 0.0;
};

struct GridResult {
  std::vector<GridRow> rows;
  std::size_t masked = 0;
  double max_abs_div = 0.0;
  double max_abs_curl = 0.0;
  double max_rel_shear_error = 0.0;
};

/// Finite-difference decomposition of the vector potential at one point.
[[nodiscard]] inline GridRow decompose_point(const FieldPoint& p, const SolenoidConfig& cfg,
                                             double relative_step) {
  const double h = relative_step * p.r();
  const auto field = [&cfg](const FieldPoint& q) { return vector_potential_cartesian(q, cfg); };
  const auto d = decompose(jacobian_fd(field, p, h, cfg.radius()));
  return {p.x(),           p.y(),          d.divergence,
          d.curl[2],       d.shear[0][0],  d.shear[0][1],
          d.shear[1][1],   shear_invariant_magnitude(d),
          std::abs(shear_rtheta_analytic(p.r(), cfg))};
}

/// Sweeps an n x n grid. For n > 1 every point within R + 2h of the axis is masked out;
/// a single-point request is evaluated as given and throws DomainError if its stencil
/// reaches into the solenoid.
[[nodiscard]] inline GridResult decompose_grid(const GridSpec& spec, const SolenoidConfig& cfg) {
  if (spec.n < 1) throw InvalidArgument("grid needs at least one point per axis");
  if (!(spec.relative_step > 0.0) || !(spec.relative_step < 0.5))
    throw InvalidArgument("relative step must lie in (0, 0.5)");
  if (!(spec.x_max >= spec.x_min) || !(spec.y_max >= spec.y_min))
    throw InvalidArgument("grid ranges must be ordered");

  GridResult out;
  const auto coord = [&](double lo, double hi, int i) {
    return spec.n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (spec.n - 1);
  };
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.n; ++i) {
      const auto p = FieldPoint::from_cartesian(coord(spec.x_min, spec.x_max, i),
                                                coord(spec.y_min, spec.y_max, j));
      if (spec.n > 1 && p.r() * (1.0 - 2.0 * spec.relative_step) < cfg.radius()) {
        ++out.masked;
        continue;
      }
      const GridRow row = decompose_point(p, cfg, spec.relative_step);
      out.max_abs_div = std::max(out.max_abs_div, std::abs(row.div));
      out.max_abs_curl = std::max(out.max_abs_curl, std::abs(row.curl_z));
      if (row.shear_mag_analytic > 0.0) {
        out.max_rel_shear_error =
            std::max(out.max_rel_shear_error,
                     std::abs(row.shear_mag - row.shear_mag_analytic) / row.shear_mag_analytic);
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

}  // namespace abshear
