#include <doctest.h>

#include <cmath>

#include "tunnelflow/envelope.hpp"
#include "tunnelflow/observables.hpp"
#include "tunnelflow/presets.hpp"

using namespace tflow;

TEST_CASE("envelope intensity hits the defining points") {
  const Envelope env{3.0, 1.5, -2.0};
  CHECK(envelope_intensity(env.center_um, env) == 1.0);
  CHECK(envelope_intensity(env.center_um + 2.9, env) == 1.0);

  const double half_point = env.flat_half_width_um + std::sqrt(2.0 * std::numbers::ln2) * env.edge_sigma_um;
  CHECK(envelope_intensity(env.center_um + half_point, env) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(envelope_intensity(env.center_um - half_point, env) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(envelope_intensity(env.center_um + 1.0e4, env) == 0.0);
  CHECK(envelope_intensity(env.center_um - 1.0e4, env) == 0.0);

  CHECK(env.intensity_fwhm() == doctest::Approx(2.0 * half_point));
}

TEST_CASE("envelope is continuous through the junctions") {
  const Envelope env{10.0, 4.0, 0.0};
  for (double x0 : {-env.flat_half_width_um, env.flat_half_width_um}) {
    const double eps = 1e-9;
    const double inside = envelope_intensity(x0 - std::copysign(eps, x0), env);
    const double outside = envelope_intensity(x0 + std::copysign(eps, x0), env);
    CHECK(inside == doctest::Approx(outside).epsilon(1e-9));
  }
  // C1 away from the junctions: compare central differences against a
  // shrinking step on the Gaussian flank.
  const double x = env.flat_half_width_um + 3.0;
  auto slope = [&](double h) {
    return (envelope_intensity(x + h, env) - envelope_intensity(x - h, env)) / (2.0 * h);
  };
  CHECK(slope(1e-4) == doctest::Approx(slope(1e-6)).epsilon(1e-6));
}

TEST_CASE("initial field reproduces the quoted widths on the grid") {
  const auto& cfg = find_preset("fig2a")->config;
  const WaveField field = make_initial_field(cfg);
  const Grid& g = cfg.grid;

  auto psi = field.channel(0);
  std::vector<double> intensity(g.n());
  for (int i = 0; i < g.n(); ++i) intensity[i] = std::norm(psi[i]);

  // Measured FWHM: outermost half-maximum crossings, linearly interpolated.
  int lo = 0;
  while (intensity[lo] < 0.5) ++lo;
  int hi = g.n() - 1;
  while (intensity[hi] < 0.5) --hi;
  auto cross = [&](int i, int dir) {
    const double f0 = intensity[i - dir], f1 = intensity[i];
    return g.x(i - dir) + (0.5 - f0) / (f1 - f0) * (g.x(i) - g.x(i - dir));
  };
  const double fwhm = cross(hi, -1) - cross(lo, 1);

  const double target = cfg.pulse.spatial_fwhm(cfg.constants);
  CHECK(fwhm == doctest::Approx(target).epsilon(2.0 * g.dx() / target));
  CHECK(fwhm == doctest::Approx(6190.0).epsilon(0.01));  // Methods' quoted width

  // Flat top: contiguous stretch at exactly unit intensity.
  int flo = 0;
  while (intensity[flo] < 1.0) ++flo;
  int fhi = g.n() - 1;
  while (intensity[fhi] < 1.0) --fhi;
  const double flat = g.x(fhi) - g.x(flo);
  CHECK(flat == doctest::Approx(cfg.pulse.spatial_flat(cfg.constants)).epsilon(2.0 * g.dx() / flat));
  CHECK(flat == doctest::Approx(4640.0).epsilon(0.01));

  CHECK(field.channel(0).size() == static_cast<size_t>(g.n()));
  CHECK(field.total_norm() > 0.0);
}

TEST_CASE("freshly built field moves at the group speed everywhere unmasked") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.grid = Grid(cfg.grid.x_min(), cfg.grid.x_max(), 1 << 15);
  const WaveField field = make_initial_field(cfg);
  const ObservableEngine engine(cfg.grid, cfg.constants);
  const auto v = engine.bohmian_velocity(field, 0);
  const auto rho = engine.density(field, 0);
  const double v0 = cfg.pulse.group_speed(cfg.constants);
  double rho_max = 0.0;
  for (double r : rho) rho_max = std::max(rho_max, r);
  double worst_core = 0.0, worst_tail = 0.0;
  int defined = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) continue;
    ++defined;
    const double err = std::abs(v[i] - v0);
    // Derivative ringing from the envelope junctions is amplified by 1/sqrt(rho)
    // out in the Gaussian tail, so the tolerance is tiered.
    if (rho[i] >= 1e-2 * rho_max)
      worst_core = std::max(worst_core, err);
    else
      worst_tail = std::max(worst_tail, err);
  }
  CHECK(defined > 0);
  CHECK(worst_core / v0 < 1e-6);
  CHECK(worst_tail / v0 < 1e-3);
}

TEST_CASE("degenerate envelope edges are rejected") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.pulse.t_flat_ns = cfg.pulse.t_fwhm_ns - 1e-9;  // edge sigma collapses below the grid
  const auto violations = validate(cfg);
  bool flagged = false;
  for (const auto& v : violations) flagged |= v.field == "pulse.t_fwhm";
  CHECK(flagged);
}

TEST_CASE("envelope wider than the box is rejected") {
  ScenarioConfig cfg = find_preset("fig2c")->config;
  cfg.pulse.center_um = cfg.grid.x_min() + 100.0;
  CHECK_THROWS_AS(make_initial_field(cfg), std::invalid_argument);
}
