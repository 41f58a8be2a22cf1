#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "abshear/errors.hpp"
#include "abshear/geometry.hpp"

namespace abshear {

/// Everything a run needs: the solenoid geometry and the incoming beam.
struct RunConfig {
  SolenoidConfig solenoid;
  BeamConfig beam;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view text, int line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    throw ConfigError("line " + std::to_string(line_no) + ": not a finite number: '" +
                      std::string(text) + "'");
  return value;
}

}  // namespace detail

/// Parses the flat `key = value` format. Recognised keys are flux_wb, radius_m and
/// speed_mps; anything else is an error. '#' starts a comment. Missing keys keep defaults.
[[nodiscard]] inline RunConfig parse_config(std::istream& in) {
  double flux = SolenoidConfig::default_flux;
  double radius = SolenoidConfig::default_radius;
  double speed = BeamConfig::default_speed;
  std::set<std::string, std::less<>> seen;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (!seen.emplace(key).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");

    if (key == "flux_wb") {
      flux = detail::parse_double(value, line_no);
    } else if (key == "radius_m") {
      radius = detail::parse_double(value, line_no);
    } else if (key == "speed_mps") {
      speed = detail::parse_double(value, line_no);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }

  try {
    return RunConfig{SolenoidConfig(flux, radius), BeamConfig(speed)};
  } catch (const InvalidArgument& ex) {
    throw ConfigError(ex.what());
  }
}

[[nodiscard]] inline RunConfig parse_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

[[nodiscard]] inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace abshear
