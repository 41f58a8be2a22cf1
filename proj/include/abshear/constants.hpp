#pragma once

namespace abshear {

/// Elementary charge, electron mass and reduced Planck constant (SI).
struct PhysicalConstants {
  double e;     ///< C
  double m;     ///< kg
  double hbar;  ///< J s

  [[nodiscard]] constexpr double charge_to_mass() const { return e / m; }
};

/// CODATA 2018 exact/recommended values. Every computation in the library uses these.
inline constexpr PhysicalConstants codata{
    1.602176634e-19,
    9.1093837015e-31,
    1.054571817e-34,
};

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace abshear
