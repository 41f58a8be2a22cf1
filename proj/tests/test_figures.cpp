#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abshear/figures.hpp"

using namespace abshear;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const SolenoidConfig defaults;
const BeamConfig beam;

std::vector<std::vector<double>> parse_rows(const std::string& csv, std::string* header = nullptr) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("nine significant digits in scientific notation", "[figures]") {
  CHECK(sci9(1.5192674488095105) == "1.51926745e+00");
  CHECK(sci9(-2.5e-17) == "-2.50000000e-17");
  CHECK(sci9(0.0) == "0.00000000e+00");
}

TEST_CASE("fig3a peaks at sqrt(2)", "[figures]") {
  std::ostringstream os;
  write_fig3a(os, beam, defaults);
  std::string header;
  const auto rows = parse_rows(os.str(), &header);
  CHECK(header == "r_over_R,f_theta_norm");
  REQUIRE(rows.size() == 400);
  CHECK(rows.front()[0] == 1.0);
  CHECK(rows.back()[0] == 10.0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][1] > rows[best][1]) best = i;
  const double spacing = rows[best + 1][0] - rows[best][0];
  CHECK_THAT(rows[best][0], WithinAbs(std::sqrt(2.0), spacing));
  // normalised curve is (1 - R^2/r^2) R^2/r^2, peak value 1/4
  CHECK_THAT(rows[best][1], WithinAbs(0.25, 1e-4));
}

TEST_CASE("fig3b follows (1 + R^2/r^2) R^2/r^2", "[figures]") {
  std::ostringstream os;
  write_fig3b(os, beam, defaults);
  for (const auto& row : parse_rows(os.str())) {
    const double q2 = 1.0 / (row[0] * row[0]);
    // both columns carry 9 significant digits
    REQUIRE_THAT(row[1], WithinRel((1 + q2) * q2, 5e-8));
  }
}

TEST_CASE("figB1 rises to ~44.71 degrees at 10R", "[figures]") {
  std::ostringstream os;
  write_figB1(os, defaults);
  std::string header;
  const auto rows = parse_rows(os.str(), &header);
  CHECK(header == "r_over_R,theta0_deg");
  CHECK(rows.front()[1] == 0.0);
  CHECK(rows.back()[0] == 10.0);
  CHECK_THAT(rows.back()[1], WithinAbs(44.7135163, 1e-7));
}

TEST_CASE("figC1 surface velocities", "[figures]") {
  std::ostringstream os;
  write_figC1(os, beam, defaults);
  std::string header;
  const auto rows = parse_rows(os.str(), &header);
  CHECK(header == "theta_deg,vx_upper_norm,vx_lower_norm,vtheta_upper_mps,vtheta_lower_mps");
  REQUIRE(rows.size() == 720);
  const double swirl = 27.9924898723330412;
  for (const auto& row : rows) {
    if (row[0] <= 0.0 || row[0] >= 180.0) continue;
    // upper speed exceeds lower by 2 * swirl; 9 digits of ~1e8 m/s resolve ~1 m/s
    REQUIRE_THAT(std::abs(row[3]) - std::abs(row[4]), WithinAbs(2 * swirl, 1.0));
  }

  std::ostringstream flat;
  write_figC1(flat, beam, defaults.with_flux(0.0));
  for (const auto& row : parse_rows(flat.str())) {
    REQUIRE_THAT(row[1], WithinAbs(row[2], 1e-8));
    REQUIRE_THAT(std::abs(row[3]), WithinRel(std::abs(row[4]), 1e-8));
  }
}

TEST_CASE("streamlines CSV", "[figures]") {
  std::ostringstream os;
  FigureOptions opt;
  opt.streamline_max_steps = 3000;
  write_streamlines(os, beam, defaults, opt);
  std::string header;
  const auto rows = parse_rows(os.str(), &header);
  CHECK(header == "path_id,step,x_m,y_m");
  std::set<int> ids;
  for (const auto& row : rows) ids.insert(static_cast<int>(row[0]));
  CHECK(ids.size() == 11);
  CHECK(rows.front()[2] == -1e-5);
  CHECK(rows.front()[3] == -5e-6);
}

TEST_CASE("emitted CSVs are byte-stable", "[figures]") {
  std::ostringstream a, b;
  write_fig3a(a, beam, defaults);
  write_figC1(a, beam, defaults);
  write_grid(a, decompose_grid(GridSpec{-5e-6, 5e-6, -5e-6, 5e-6, 21, 1e-4}, defaults));
  write_fig3a(b, beam, defaults);
  write_figC1(b, beam, defaults);
  write_grid(b, decompose_grid(GridSpec{-5e-6, 5e-6, -5e-6, 5e-6, 21, 1e-4}, defaults));
  CHECK(a.str() == b.str());
}

TEST_CASE("figures needing a force scale reject zero flux", "[figures]") {
  std::ostringstream os;
  CHECK_THROWS_AS(write_fig3a(os, beam, defaults.with_flux(0.0)), PreconditionError);
  CHECK_THROWS_AS(write_fig3b(os, BeamConfig(0.0), defaults), PreconditionError);
  CHECK_THROWS_AS(write_figC1(os, BeamConfig(0.0), defaults), PreconditionError);
}
