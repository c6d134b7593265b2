#include <doctest.h>

#include <cmath>
#include <random>

#include "tunnelflow/grid.hpp"
#include "tunnelflow/presets.hpp"
#include "tunnelflow/scenario.hpp"
#include "tunnelflow/units.hpp"

using namespace tflow;

namespace {
bool has_violation(const std::vector<Violation>& vs, const std::string& field) {
  for (const auto& v : vs)
    if (v.field == field) return true;
  return false;
}
}  // namespace

TEST_CASE("mass conversion reproduces the SI group speed") {
  // Independent route: E = mv^2/2 evaluated in SI, then m/s -> um/ns.
  const double energy_j = 0.638 * units::joule_per_mev;
  const double v_si = std::sqrt(2.0 * energy_j / 6.95e-36);  // m/s
  const double v_expected = v_si * 1.0e-3;                   // um/ns

  const double m = mass_from_kg(6.95e-36);
  const double v_internal = std::sqrt(2.0 * 0.638 / m);
  CHECK(v_internal == doctest::Approx(v_expected).epsilon(1e-12));
  CHECK(v_internal == doctest::Approx(5423.6).epsilon(1e-4));
}

TEST_CASE("mass conversion rejects non-positive input") {
  CHECK_THROWS_AS(mass_from_kg(0.0), std::invalid_argument);
  CHECK_THROWS_AS(mass_from_kg(-1.0), std::invalid_argument);
}

TEST_CASE("mass conversion round-trips to 12 digits") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> exp_dist(-40.0, -20.0);
  for (int i = 0; i < 200; ++i) {
    const double kg = std::pow(10.0, exp_dist(rng));
    CHECK(mass_to_kg(mass_from_kg(kg)) == doctest::Approx(kg).epsilon(1e-12));
  }
}

TEST_CASE("grid spectrum follows the discrete ordering") {
  const Grid g(-100.0, 100.0, 64);
  const auto& k = g.wavenumbers();
  CHECK(k[0] == 0.0);
  CHECK(k[1] == doctest::Approx(2.0 * std::numbers::pi / 200.0));
  CHECK(k[63] == doctest::Approx(-k[1]));
  double kmax = 0.0;
  for (double v : k) kmax = std::max(kmax, std::abs(v));
  CHECK(kmax == doctest::Approx(std::numbers::pi / g.dx()));
  CHECK(g.dx() == doctest::Approx(200.0 / 64));
}

TEST_CASE("paper preset validates clean") {
  const Preset* p = find_preset("fig2a");
  REQUIRE(p != nullptr);
  CHECK(p->config.grid.x_min() == doctest::Approx(-13930.0));
  CHECK(p->config.pulse.center_um == doctest::Approx(-6960.0));
  CHECK(validate(p->config).empty());
}

TEST_CASE("every shipped preset validates") {
  for (const auto& p : all_presets()) {
    CAPTURE(p.name);
    CHECK(validate(p.config).empty());
  }
}

TEST_CASE("probe outside the box is a violation, not a fault") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.probes_um.push_back(2.0 * cfg.grid.x_max());
  CHECK(has_violation(validate(cfg), "probes"));
}

TEST_CASE("insufficient wavelength resolution is flagged") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.grid = Grid(cfg.grid.x_min(), cfg.grid.x_max(), 1 << 10);  // dx ~ lambda/0.8
  CHECK(has_violation(validate(cfg), "grid.dx"));
}

TEST_CASE("non-power-of-two grids are flagged") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.grid = Grid(cfg.grid.x_min(), cfg.grid.x_max(), (1 << 18) - 10);
  CHECK(has_violation(validate(cfg), "grid.n"));
}

TEST_CASE("semi-infinite barrier demands an absorbing layer with clearance") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.potential.cap.enabled = false;
  CHECK(has_violation(validate(cfg), "potential.cap"));

  cfg = find_preset("fig2c")->config;
  cfg.potential.cap.onset_um = 50.0;  // well inside 40 decay lengths of the 8.45 um probe
  CHECK(has_violation(validate(cfg), "potential.cap.onset"));
}

TEST_CASE("derived spatial widths match the quoted values to 1%") {
  struct Row {
    const char* preset;
    double fwhm_um;
    double flat_um;
  };
  const Row rows[] = {{"fig2a", 6190.0, 4640.0}, {"fig2b", 5680.0, 4260.0}, {"fig2c", 5130.0, 3850.0}};
  for (const auto& row : rows) {
    const Preset* p = find_preset(row.preset);
    REQUIRE(p != nullptr);
    const auto& cfg = p->config;
    CHECK(cfg.pulse.spatial_fwhm(cfg.constants) == doctest::Approx(row.fwhm_um).epsilon(0.01));
    CHECK(cfg.pulse.spatial_flat(cfg.constants) == doctest::Approx(row.flat_um).epsilon(0.01));
  }
}

TEST_CASE("plateau leading edge reaches the barrier near 0.856 ns") {
  for (const char* name : {"fig2a", "fig2b", "fig2c"}) {
    const auto& cfg = find_preset(name)->config;
    const double v0 = cfg.pulse.group_speed(cfg.constants);
    const double lead_edge = cfg.pulse.center_um + 0.5 * cfg.pulse.spatial_flat(cfg.constants);
    const double arrival = -lead_edge / v0;
    CAPTURE(name);
    CHECK(arrival == doctest::Approx(0.856).epsilon(0.02));
  }
}
