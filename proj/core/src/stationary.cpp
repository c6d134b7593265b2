#include "tunnelflow/stationary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tflow {

namespace {
constexpr double kRegimeBoundary = 1.0e-9;  // meV
}

Regime classify(double energy_mev, double barrier_mev, const PhysicalConstants& c) {
  if (!(energy_mev > 0.0)) throw std::invalid_argument("classify: energy must be positive");
  if (barrier_mev < 0.0) throw std::invalid_argument("classify: barrier height must be non-negative");

  Regime r;
  r.energy_mev = energy_mev;
  r.barrier_mev = barrier_mev;
  r.detuning_mev = energy_mev - barrier_mev;
  r.k = std::sqrt(2.0 * c.mass * energy_mev) / c.hbar;
  r.v0 = c.hbar * r.k / c.mass;

  if (r.detuning_mev < -kRegimeBoundary) {
    r.kind = RegimeKind::Below;
    r.kappa = std::sqrt(2.0 * c.mass * (barrier_mev - energy_mev)) / c.hbar;
  } else if (r.detuning_mev > kRegimeBoundary) {
    r.kind = RegimeKind::Above;
    r.k_in = std::sqrt(2.0 * c.mass * (energy_mev - barrier_mev)) / c.hbar;
  } else {
    r.kind = RegimeKind::Critical;
  }
  return r;
}

StationaryCoefficients stationary_coefficients(const Regime& regime, double width_um) {
  if (regime.kind != RegimeKind::Below)
    throw std::invalid_argument("stationary_coefficients: exponential basis exists only below the barrier");
  const double k = regime.k;
  const double kappa = regime.kappa;
  const double a = width_um;
  const std::complex<double> edge = std::polar(1.0, k * a);  // psi(a) for unit transmission
  StationaryCoefficients c;
  c.grow = 0.5 * std::complex<double>(1.0, k / kappa) * edge * std::exp(-kappa * a);
  c.decay = 0.5 * std::complex<double>(1.0, -k / kappa) * edge * std::exp(kappa * a);
  return c;
}

std::complex<double> stationary_psi(const StationaryCoefficients& coeff, const Regime& regime,
                                    double x_um) {
  return coeff.grow * std::exp(regime.kappa * x_um) + coeff.decay * std::exp(-regime.kappa * x_um);
}

double phase_tangent(double x_um, const Regime& regime, double width_um) {
  if (regime.kind != RegimeKind::Below)
    throw std::invalid_argument("phase_tangent: defined for the Below regime");
  const double k = regime.k;
  const double kappa = regime.kappa;
  const double ka = k * width_um;
  const double up = std::exp(kappa * (x_um - width_um));
  const double dn = std::exp(-kappa * (x_um - width_um));
  const double ratio = k / kappa;
  const double num = up * (std::sin(ka) + ratio * std::cos(ka)) + dn * (std::sin(ka) - ratio * std::cos(ka));
  const double den = up * (std::cos(ka) - ratio * std::sin(ka)) + dn * (std::cos(ka) + ratio * std::sin(ka));
  if (den == 0.0) return std::copysign(std::numeric_limits<double>::infinity(), num);
  return num / den;
}

double steady_velocity(double x_um, const Regime& regime, std::optional<double> width_um) {
  if (!width_um) {
    // Step barrier: no growing component, so the phase is flat below and at
    // the top; above, the in-barrier travelling wave keeps its own speed.
    return regime.kind == RegimeKind::Above ? regime.v0 * regime.k_in / regime.k : 0.0;
  }
  const double a = *width_um;
  if (x_um < 0.0 || x_um > a)
    throw std::invalid_argument("steady_velocity: position outside the barrier");

  switch (regime.kind) {
    case RegimeKind::Below: {
      const double s = std::sinh(regime.kappa * (x_um - a));
      return regime.v0 / (1.0 + regime.barrier_mev / std::abs(regime.detuning_mev) * s * s);
    }
    case RegimeKind::Critical: {
      const double u = regime.k * (x_um - a);
      return regime.v0 / (1.0 + u * u);
    }
    case RegimeKind::Above: {
      const double s = std::sin(regime.k_in * (x_um - a));
      return regime.v0 / (1.0 + regime.barrier_mev / regime.detuning_mev * s * s);
    }
  }
  return 0.0;
}

WidthScanTable velocity_vs_width_table(const Regime& regime, std::span<const double> fractions,
                                       double a_min_um, double a_max_um, int n_widths) {
  if (regime.kind != RegimeKind::Below)
    throw std::invalid_argument("velocity_vs_width_table: expects the Below regime");
  if (fractions.empty() || n_widths < 2 || !(a_max_um > a_min_um))
    throw std::invalid_argument("velocity_vs_width_table: empty range");

  WidthScanTable t;
  t.fractions.assign(fractions.begin(), fractions.end());
  t.widths_um.resize(n_widths);
  const double da = (a_max_um - a_min_um) / (n_widths - 1);
  for (int i = 0; i < n_widths; ++i) t.widths_um[i] = a_min_um + i * da;
  t.v_km_s.assign(fractions.size(), std::vector<double>(n_widths));
  for (size_t f = 0; f < fractions.size(); ++f)
    for (int i = 0; i < n_widths; ++i) {
      const double a = t.widths_um[i];
      t.v_km_s[f][i] = steady_velocity(fractions[f] * a, regime, a);
    }
  return t;
}

}  // namespace tflow
