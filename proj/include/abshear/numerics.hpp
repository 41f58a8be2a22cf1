#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "abshear/errors.hpp"

namespace abshear::numerics {

/// n points from lo to hi inclusive.
[[nodiscard]] inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw InvalidArgument("linspace needs n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  if (n > 1) out.back() = hi;
  return out;
}

/// n geometrically spaced points from lo to hi inclusive (lo, hi > 0).
[[nodiscard]] inline std::vector<double> logspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw InvalidArgument("logspace bounds must be positive");
  auto out = linspace(std::log(lo), std::log(hi), n);
  for (auto& v : out) v = std::exp(v);
  out.front() = lo;
  if (n > 1) out.back() = hi;
  return out;
}

/// Composite trapezoid integral of f over [a, b] with n >= 2 equally spaced samples.
template <typename F>
[[nodiscard]] double trapezoid(F&& f, double a, double b, int n) {
  if (n < 2) throw InvalidArgument("trapezoid rule needs at least two samples");
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
    throw InvalidArgument("integration range must be finite with b > a");
  const double h = (b - a) / (n - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n - 1; ++i) sum += f(a + h * i);
  return sum * h;
}

template <typename F>
[[nodiscard]] double trapezoid_average(F&& f, double a, double b, int n) {
  return trapezoid(std::forward<F>(f), a, b, n) / (b - a);
}

/// Golden-section search for the maximiser of a unimodal f on [a, b].
template <typename F>
[[nodiscard]] double golden_section_maximize(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

[[nodiscard]] inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

/// Population standard deviation.
[[nodiscard]] inline double stddev(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const double mu = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - mu) * (x - mu);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

/// |actual - expected| / |expected|, with 0/0 read as agreement.
[[nodiscard]] inline double relative_error(double actual, double expected) {
  const double diff = std::abs(actual - expected);
  if (expected == 0.0) return diff == 0.0 ? 0.0 : HUGE_VAL;
  return diff / std::abs(expected);
}

}  // namespace abshear::numerics
