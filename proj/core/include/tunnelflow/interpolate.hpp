#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "tunnelflow/grid.hpp"

namespace tflow {

/// Four-point Lagrange (cubic) interpolation on the uniform grid.
/// Probe positions typically fall between lattice points; nearest-neighbour
/// sampling would bias sub-dx depths.
inline double interpolate_cubic(const Grid& grid, std::span<const double> f, double x_um) {
  const int n = grid.n();
  double u = (x_um - grid.x_min()) / grid.dx();
  int i = static_cast<int>(std::floor(u));
  i = std::clamp(i, 1, n - 3);
  const double s = u - i;
  const double w0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
  const double w1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  const double w2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
  const double w3 = (s + 1.0) * s * (s - 1.0) / 6.0;
  return w0 * f[i - 1] + w1 * f[i] + w2 * f[i + 1] + w3 * f[i + 2];
}

}  // namespace tflow
