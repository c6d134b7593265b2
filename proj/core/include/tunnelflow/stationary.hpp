#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "tunnelflow/units.hpp"

namespace tflow {

enum class RegimeKind { Below, Critical, Above };

/// Wavevectors of the stationary square-barrier problem for one (E, V0) pair.
struct Regime {
  RegimeKind kind = RegimeKind::Critical;
  double energy_mev = 0.0;
  double barrier_mev = 0.0;
  double detuning_mev = 0.0;  // E - V0
  double k = 0.0;             // incident wavenumber, rad/um
  double kappa = 0.0;         // decay constant, Below only
  double k_in = 0.0;          // in-barrier wavenumber, Above only
  double v0 = 0.0;            // incident speed, um/ns == km/s
};

/// Exact on sign(E - V0); inputs within 1e-9 meV of the boundary are routed
/// to the Critical branch where the hyperbolic forms underflow.
Regime classify(double energy_mev, double barrier_mev, const PhysicalConstants& c);

/// In-barrier amplitudes for the Below regime in the basis {e^{kx}, e^{-kx}},
/// normalised to a unit transmitted wave.
struct StationaryCoefficients {
  std::complex<double> grow;   // A
  std::complex<double> decay;  // B
};

StationaryCoefficients stationary_coefficients(const Regime& regime, double width_um);

/// psi(x) inside the barrier reconstructed from the matching coefficients.
std::complex<double> stationary_psi(const StationaryCoefficients& coeff, const Regime& regime,
                                    double x_um);

/// tan S(x) = Im(psi)/Re(psi) for the Below regime; +-inf where Re vanishes.
double phase_tangent(double x_um, const Regime& regime, double width_um);

/// Closed-form steady-state speed at depth x for a finite barrier of the given
/// width, or for the semi-infinite barrier when width is absent. km/s.
double steady_velocity(double x_um, const Regime& regime, std::optional<double> width_um);

struct WidthScanTable {
  std::vector<double> widths_um;
  std::vector<double> fractions;              // depth as a fraction of the width
  std::vector<std::vector<double>> v_km_s;    // [fraction][width]
};

WidthScanTable velocity_vs_width_table(const Regime& regime, std::span<const double> fractions,
                                       double a_min_um, double a_max_um, int n_widths);

}  // namespace tflow
