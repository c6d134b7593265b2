#include "tunnelflow/envelope.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace tflow {

namespace {
const double kFwhmSigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);  // FWHM of a unit-sigma Gaussian
}

Envelope Envelope::from_pulse(const PulseSpec& pulse, const PhysicalConstants& c) {
  const double v0 = pulse.group_speed(c);
  Envelope env;
  env.center_um = pulse.center_um;
  env.flat_half_width_um = 0.5 * pulse.t_flat_ns * v0;
  // The Gaussian edges carry the remaining FWHM budget t_fwhm - t_flat.
  env.edge_sigma_um = (pulse.t_fwhm_ns - pulse.t_flat_ns) * v0 / kFwhmSigma;
  return env;
}

double Envelope::intensity_fwhm() const {
  return 2.0 * flat_half_width_um + kFwhmSigma * edge_sigma_um;
}

double envelope_intensity(double x_um, const Envelope& env) {
  const double d = std::abs(x_um - env.center_um) - env.flat_half_width_um;
  if (d <= 0.0) return 1.0;
  const double u = d / env.edge_sigma_um;
  return std::exp(-0.5 * u * u);
}

WaveField make_initial_field(const ScenarioConfig& config) {
  const Envelope env = Envelope::from_pulse(config.pulse, config.constants);
  const Grid& grid = config.grid;

  const double support = env.flat_half_width_um + 6.0 * env.edge_sigma_um;
  if (env.center_um - support < grid.x_min() || env.center_um + support > grid.x_max())
    throw std::invalid_argument("make_initial_field: envelope wider than the grid box");

  const double k = config.pulse.carrier_wavenumber(config.constants);
  WaveField field(grid, config.channels());
  auto psi = field.channel(0);
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const double amp = std::sqrt(envelope_intensity(x, env));
    psi[i] = amp * std::polar(1.0, k * x);
  }
  return field;
}

}  // namespace tflow
