#pragma once

#include <span>
#include <string>

namespace tflow {

struct FitWindow {
  double x_lo_um = 0.0;
  double x_hi_um = 0.0;
};

/// Result of the relative-density parabola fit rho2~ = (C0 (x - x0) / v)^2.
struct FitResult {
  bool ok = false;
  double v_km_s = 0.0;
  double x0_um = 0.0;
  double r_squared = 0.0;
  FitWindow window;
  int n_points = 0;
  std::string failure;
};

/// Least-squares estimate of (v, x0): sqrt(rho2~) is linear in x on a window
/// where x - x0 keeps one sign, so an ordinary linear fit is exact and
/// deterministic. R^2 is evaluated on the quadratic model, not its root.
FitResult fit_relative_density(std::span<const double> x_um, std::span<const double> rho_tilde,
                               double c0_per_ns, const FitWindow& window);

/// Default window: from the coupling onset to the first crossing of 0.25,
/// where the small-transfer parabola stops being a faithful model.
FitWindow default_fit_window(std::span<const double> x_um, std::span<const double> rho_tilde,
                             double coupling_onset_um);

/// Pairs the fitted apparent speed with the measured plateau Bohmian speed.
struct ContrastReport {
  double fitted_v_km_s = 0.0;
  double plateau_v_km_s = 0.0;
  double ratio = 0.0;
  bool infinite_ratio = false;
};

ContrastReport contrast_report(const FitResult& fit, double plateau_velocity_km_s);

}  // namespace tflow
