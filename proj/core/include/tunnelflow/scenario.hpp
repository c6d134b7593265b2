#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tunnelflow/grid.hpp"
#include "tunnelflow/units.hpp"

namespace tflow {

struct PulseSpec {
  double energy_mev = 0.0;  // kinetic energy of the carrier
  double t_fwhm_ns = 0.0;   // intensity full width at half maximum
  double t_flat_ns = 0.0;   // flat-top duration
  double center_um = 0.0;   // packet centre at t = 0

  double group_speed(const PhysicalConstants& c) const {  // um/ns
    return std::sqrt(2.0 * energy_mev / c.mass);
  }
  double carrier_wavenumber(const PhysicalConstants& c) const {  // rad/um
    return c.mass * group_speed(c) / c.hbar;
  }
  double spatial_fwhm(const PhysicalConstants& c) const { return group_speed(c) * t_fwhm_ns; }
  double spatial_flat(const PhysicalConstants& c) const { return group_speed(c) * t_flat_ns; }
};

struct CapSpec {
  bool enabled = false;
  double onset_um = 0.0;
  double width_um = 0.0;     // ramp length; the quartic keeps growing past it
  double strength_mev = 0.0; // value of W at onset + width
};

struct PotentialSpec {
  double v0_mev = 0.0;
  double barrier_start_um = 0.0;
  std::optional<double> barrier_width_um;  // nullopt = semi-infinite
  double wg2_prebarrier_offset_mev = 0.0;  // channel-2 potential left of the barrier
  double coupling_energy_mev = 0.0;        // hbar * C0
  double coupling_onset_um = 0.0;
  double gamma_per_ns = 0.0;               // dissipation rate, GHz == 1/ns
  CapSpec cap;

  bool two_channel() const { return coupling_energy_mev > 0.0; }
  bool semi_infinite() const { return !barrier_width_um.has_value(); }

  bool in_barrier(double x) const {
    if (x < barrier_start_um) return false;
    return semi_infinite() || x < barrier_start_um + *barrier_width_um;
  }

  // Real channel potentials, meV.
  double v1(double x) const { return in_barrier(x) ? v0_mev : 0.0; }
  double v2(double x) const {
    return x < barrier_start_um ? wg2_prebarrier_offset_mev : (in_barrier(x) ? v0_mev : 0.0);
  }
  double coupling_energy_at(double x) const {  // hbar*C(x), meV
    return x >= coupling_onset_um ? coupling_energy_mev : 0.0;
  }
  double gamma_at(double x) const { return x >= barrier_start_um ? gamma_per_ns : 0.0; }
  double cap_w(double x) const {  // absorbing potential, meV
    if (!cap.enabled || x <= cap.onset_um) return 0.0;
    const double u = (x - cap.onset_um) / cap.width_um;
    return cap.strength_mev * u * u * u * u;
  }
};

struct ScenarioConfig {
  PhysicalConstants constants = PhysicalConstants::for_mass_kg(6.95e-36);
  Grid grid{-1.0, 1.0, 2};
  PulseSpec pulse;
  PotentialSpec potential;
  double dt_ns = 5.0e-5;
  double t_end_ns = 0.0;
  std::vector<double> probes_um;
  int frame_stride = 20;

  int channels() const { return potential.two_channel() ? 2 : 1; }
  std::int64_t step_count() const { return std::llround(t_end_ns / dt_ns); }

  /// Detuning including the coupled-system shift hbar*C0, meV.
  double detuning_mev() const {
    return pulse.energy_mev - potential.v0_mev + potential.coupling_energy_mev;
  }
};

struct Violation {
  std::string field;
  std::string message;
};

/// Checks every structural invariant; violations are data, not faults.
std::vector<Violation> validate(const ScenarioConfig& config);

}  // namespace tflow
