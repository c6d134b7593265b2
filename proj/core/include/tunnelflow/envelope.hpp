#pragma once

#include "tunnelflow/scenario.hpp"
#include "tunnelflow/wave_field.hpp"

namespace tflow {

/// Flat-top intensity profile with Gaussian rising and falling edges.
struct Envelope {
  double flat_half_width_um = 0.0;
  double edge_sigma_um = 0.0;  // std deviation of the intensity Gaussian
  double center_um = 0.0;

  static Envelope from_pulse(const PulseSpec& pulse, const PhysicalConstants& c);

  double intensity_fwhm() const;
};

/// Piecewise intensity in [0, 1]: unity on the plateau, Gaussian tails outside.
double envelope_intensity(double x_um, const Envelope& env);

/// Channel 1 = sqrt(intensity) * plane-wave carrier; channel 2 (if any) = 0.
WaveField make_initial_field(const ScenarioConfig& config);

}  // namespace tflow
