#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "abshear/abshear.hpp"

namespace abshear::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  config_error = 2,
  io_error = 3,
  geometry_error = 4,
  precondition_violated = 5,
};

struct Options {
  std::string config_path;
  std::string output_path;
  int samples = 0;
  double step = 0.0;
  double rmax = 0.0;
  std::string figure;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline RunConfig resolve_config(const Options& opt) {
  return opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
}

/// Writes `body` to `path`, or to `out` when path is "-".
inline void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << body;
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

inline std::string kv(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

inline int cmd_figure(const Options& opt, std::ostream& out) {
  const RunConfig run = resolve_config(opt);
  FigureOptions fig;
  fig.samples = opt.samples;
  if (opt.rmax > 0.0) fig.r_max_over_R = opt.rmax;
  if (opt.step > 0.0) fig.streamline_dt = opt.step;

  std::ostringstream csv;
  if (opt.figure == "fig3a") {
    write_fig3a(csv, run.beam, run.solenoid, fig);
  } else if (opt.figure == "fig3b") {
    write_fig3b(csv, run.beam, run.solenoid, fig);
  } else if (opt.figure == "figB1") {
    write_figB1(csv, run.solenoid, fig);
  } else if (opt.figure == "figC1") {
    write_figC1(csv, run.beam, run.solenoid, fig);
  } else if (opt.figure == "streamlines") {
    if (opt.samples > 0) fig.streamline_max_steps = opt.samples;
    write_streamlines(csv, run.beam, run.solenoid, fig);
  } else {
    throw InvalidArgument("unknown figure '" + opt.figure + "'");
  }
  emit(opt.output_path.empty() ? opt.figure + ".csv" : opt.output_path, csv.str(), out);
  return ok;
}

inline int cmd_decompose_grid(const Options& opt, std::ostream& out) {
  const RunConfig run = resolve_config(opt);
  const double R = run.solenoid.radius();
  const double half = (opt.rmax > 0.0 ? opt.rmax : 5.0) * R;
  GridSpec spec{-half, half, -half, half, opt.samples > 0 ? opt.samples : 101,
                opt.step > 0.0 ? opt.step : 1e-4};
  const GridResult grid = decompose_grid(spec, run.solenoid);

  std::ostringstream csv;
  write_grid(csv, grid);
  emit(opt.output_path.empty() ? "decomposition.csv" : opt.output_path, csv.str(), out);
  if (opt.output_path != "-") {
    out << "points = " << grid.rows.size() << '\n'
        << "masked = " << grid.masked << '\n'
        << "max_abs_div = " << kv(grid.max_abs_div) << '\n'
        << "max_abs_curl_z = " << kv(grid.max_abs_curl) << '\n'
        << "max_rel_shear_error = " << kv(grid.max_rel_shear_error) << '\n';
  }
  return ok;
}

inline int cmd_phase(const Options& opt, std::ostream& out) {
  const RunConfig run = resolve_config(opt);
  const PhaseResult result =
      ab_phase_numeric(run.beam, run.solenoid, opt.samples > 0 ? opt.samples : 1000);
  out << "delta_phi_numeric_rad = " << kv(result.delta_phi_numeric) << '\n'
      << "delta_phi_analytic_rad = " << kv(result.delta_phi_analytic) << '\n'
      << "asymmetry = " << kv(result.asymmetry) << '\n'
      << "speed_diff_mean_mps = " << kv(result.speed_diff_mean) << '\n'
      << "speed_diff_rel_std = " << kv(result.speed_diff_rel_std) << '\n'
      << "speed_diff_samples = " << result.speed_diff_trace.size() << '\n'
      << "sign_convention = direct_evaluation\n";
  return ok;
}

inline int cmd_verify(const Options& opt, std::ostream& out) {
  const RunConfig run = resolve_config(opt);
  const RunReport report = run_acceptance(run);
  print_report(out, report);
  return report.overall() ? ok : verification_failed;
}

/// Entry point shared by the executable and the tests. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shear-of-vector-potential model of the Aharonov-Bohm effect", "abshear"};
  app.require_subcommand(1);
  Options opt;

  const auto common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "key = value configuration file");
    sub->add_option("-o,--output", opt.output_path, "output CSV path ('-' for stdout)");
    sub->add_option("--samples", opt.samples, "sample count (per-command meaning)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--step", opt.step, "relative FD step, or streamline dt in R/v0")
        ->check(CLI::PositiveNumber);
    sub->add_option("--rmax", opt.rmax, "outer radius / grid half-width in units of R")
        ->check(CLI::PositiveNumber);
  };
  auto* figure = app.add_subcommand("figure", "write figure data as CSV");
  figure->add_option("name", opt.figure, "fig3a | fig3b | figB1 | figC1 | streamlines")
      ->required()
      ->check(CLI::IsMember({"fig3a", "fig3b", "figB1", "figC1", "streamlines"}));
  common(figure);
  auto* grid = app.add_subcommand("decompose-grid", "finite-difference shear decomposition on a grid");
  common(grid);
  auto* phase = app.add_subcommand("phase", "semi-classical phase shift");
  common(phase);
  auto* verify = app.add_subcommand("verify", "run every acceptance check");
  common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  }

  try {
    if (*figure) return cmd_figure(opt, out);
    if (*grid) return cmd_decompose_grid(opt, out);
    if (*phase) return cmd_phase(opt, out);
    return cmd_verify(opt, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return io_error;
  } catch (const DomainError& e) {
    err << "geometry error: " << e.what() << '\n';
    return geometry_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return precondition_violated;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return config_error;
  }
}

}  // namespace abshear::cli
