#include "tunnelflow/density_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace tflow {

namespace {
constexpr double kNegativeTolerance = 1.0e-12;
}

FitResult fit_relative_density(std::span<const double> x_um, std::span<const double> rho_tilde,
                               double c0_per_ns, const FitWindow& window) {
  FitResult res;
  res.window = window;

  std::vector<double> xs, ys;  // y = sqrt(rho~)
  for (size_t i = 0; i < x_um.size(); ++i) {
    const double x = x_um[i];
    if (x < window.x_lo_um || x > window.x_hi_um) continue;
    double r = rho_tilde[i];
    if (!std::isfinite(r)) continue;
    if (r < 0.0) {
      if (r < -kNegativeTolerance) {
        res.failure = "negative relative density inside the fit window";
        return res;
      }
      r = 0.0;
    }
    xs.push_back(x);
    ys.push_back(std::sqrt(r));
  }
  res.n_points = static_cast<int>(xs.size());
  if (res.n_points < 3) {
    res.failure = "fewer than three usable points in the fit window";
    return res;
  }

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det <= 0.0) {
    res.failure = "degenerate abscissa";
    return res;
  }
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy * sxx - sx * sxy) / det;
  double y_max = 0.0;
  for (double y : ys) y_max = std::max(y_max, y);
  const double span = xs.back() - xs.front();
  if (!std::isfinite(slope) || !(slope * span > 1e-9 * y_max)) {
    res.failure = "relative density does not grow across the window";
    return res;
  }

  res.v_km_s = c0_per_ns / slope;
  res.x0_um = -intercept / slope;

  // Goodness of fit against the parabola itself.
  double mean = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) mean += ys[i] * ys[i];
  mean /= n;
  double ss_res = 0.0, ss_tot = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double data = ys[i] * ys[i];
    const double model = slope * (xs[i] - res.x0_um);
    ss_res += (data - model * model) * (data - model * model);
    ss_tot += (data - mean) * (data - mean);
  }
  if (ss_tot <= 0.0) {
    res.failure = "constant relative density";
    return res;
  }
  res.r_squared = 1.0 - ss_res / ss_tot;
  res.ok = true;
  return res;
}

FitWindow default_fit_window(std::span<const double> x_um, std::span<const double> rho_tilde,
                             double coupling_onset_um) {
  FitWindow w;
  w.x_lo_um = coupling_onset_um;
  w.x_hi_um = x_um.empty() ? coupling_onset_um : x_um.back();
  for (size_t i = 0; i < x_um.size(); ++i) {
    if (x_um[i] < coupling_onset_um) continue;
    if (std::isfinite(rho_tilde[i]) && rho_tilde[i] > 0.25) {
      w.x_hi_um = x_um[i];
      break;
    }
  }
  return w;
}

ContrastReport contrast_report(const FitResult& fit, double plateau_velocity_km_s) {
  ContrastReport r;
  r.fitted_v_km_s = fit.v_km_s;
  r.plateau_v_km_s = plateau_velocity_km_s;
  if (plateau_velocity_km_s == 0.0) {
    r.infinite_ratio = true;
    r.ratio = std::numeric_limits<double>::infinity();
  } else {
    r.ratio = fit.v_km_s / plateau_velocity_km_s;
  }
  return r;
}

}  // namespace tflow
