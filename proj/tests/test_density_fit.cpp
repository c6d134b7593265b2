#include <doctest.h>

#include <cmath>
#include <vector>

#include "tunnelflow/density_fit.hpp"

using namespace tflow;

namespace {

struct Synthetic {
  std::vector<double> x, rho;
};

Synthetic parabola(double c0, double v, double x0, double x_lo, double x_hi, int n) {
  Synthetic s;
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (n - 1);
    const double u = c0 * (x - x0) / v;
    s.x.push_back(x);
    s.rho.push_back(u * u);
  }
  return s;
}

}  // namespace

TEST_CASE("exact parabola is recovered to solver precision") {
  const double c0 = 39.8, v = 1500.0, x0 = -2.0;
  const auto data = parabola(c0, v, x0, 1.0, 12.0, 200);
  const auto fit = fit_relative_density(data.x, data.rho, c0, {1.0, 12.0});
  REQUIRE(fit.ok);
  CHECK(fit.v_km_s == doctest::Approx(v).epsilon(1e-9));
  CHECK(fit.x0_um == doctest::Approx(x0).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_points == 200);
}

TEST_CASE("recovery is insensitive to window placement on exact data") {
  const double c0 = 39.8, v = 2300.0, x0 = -1.9;
  const auto data = parabola(c0, v, x0, 0.5, 30.0, 500);
  for (const auto& w : {FitWindow{0.5, 8.0}, FitWindow{3.0, 18.0}, FitWindow{10.0, 30.0}}) {
    const auto fit = fit_relative_density(data.x, data.rho, c0, w);
    REQUIRE(fit.ok);
    CHECK(fit.v_km_s == doctest::Approx(v).epsilon(1e-8));
    CHECK(fit.x0_um == doctest::Approx(x0).epsilon(1e-7));
  }
}

TEST_CASE("constant relative density fails the fit") {
  std::vector<double> x, rho;
  for (int i = 0; i < 50; ++i) {
    x.push_back(i * 0.1);
    rho.push_back(0.04);
  }
  const auto fit = fit_relative_density(x, rho, 40.0, {0.0, 5.0});
  CHECK(!fit.ok);
  CHECK(!fit.failure.empty());
}

TEST_CASE("strongly negative densities fail, tiny negatives are clipped") {
  auto data = parabola(40.0, 1800.0, -1.0, 1.0, 10.0, 100);
  data.rho[10] = -1e-15;  // numerical noise
  auto fit = fit_relative_density(data.x, data.rho, 40.0, {1.0, 10.0});
  CHECK(fit.ok);

  data.rho[10] = -1e-3;
  fit = fit_relative_density(data.x, data.rho, 40.0, {1.0, 10.0});
  CHECK(!fit.ok);
}

TEST_CASE("too few points fail the fit") {
  const auto data = parabola(40.0, 1800.0, -1.0, 1.0, 10.0, 100);
  const auto fit = fit_relative_density(data.x, data.rho, 40.0, {1.0, 1.15});
  CHECK(!fit.ok);
  CHECK(fit.n_points < 3);
}

TEST_CASE("doubling the coupling rate doubles v and nothing else") {
  // Reparameterization consistency on non-ideal data (mild distortion).
  const double c0 = 39.8;
  auto data = parabola(c0, 2100.0, -1.5, 1.0, 20.0, 300);
  for (size_t i = 0; i < data.rho.size(); ++i) data.rho[i] *= 1.0 + 0.05 * std::sin(0.7 * data.x[i]);

  const auto fit1 = fit_relative_density(data.x, data.rho, c0, {1.0, 20.0});
  const auto fit2 = fit_relative_density(data.x, data.rho, 2.0 * c0, {1.0, 20.0});
  REQUIRE(fit1.ok);
  REQUIRE(fit2.ok);
  CHECK(fit2.v_km_s == doctest::Approx(2.0 * fit1.v_km_s).epsilon(1e-12));
  CHECK(fit2.x0_um == doctest::Approx(fit1.x0_um).epsilon(1e-12));
  CHECK(fit2.r_squared == doctest::Approx(fit1.r_squared).epsilon(1e-12));
}

TEST_CASE("default window runs from the onset to the 0.25 crossing") {
  const auto data = parabola(40.0, 1000.0, 0.0, 0.0, 30.0, 301);  // 0.25 at x = 12.5
  const auto w = default_fit_window(data.x, data.rho, 1.0);
  CHECK(w.x_lo_um == 1.0);
  CHECK(w.x_hi_um == doctest::Approx(12.6).epsilon(0.01));
}

TEST_CASE("contrast report pairs the two speeds") {
  FitResult fit;
  fit.ok = true;
  fit.v_km_s = 2292.0;

  const auto frozen = contrast_report(fit, 0.0);
  CHECK(frozen.infinite_ratio);
  CHECK(std::isinf(frozen.ratio));

  const auto equal = contrast_report(fit, 2292.0);
  CHECK(!equal.infinite_ratio);
  CHECK(equal.ratio == doctest::Approx(1.0));

  const auto dissipative = contrast_report(fit, 13.0);
  CHECK(dissipative.ratio == doctest::Approx(176.3).epsilon(0.001));
}
