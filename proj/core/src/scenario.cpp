#include "tunnelflow/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tunnelflow/envelope.hpp"

namespace tflow {

namespace {

void check(std::vector<Violation>& out, bool ok, std::string field, std::string message) {
  if (!ok) out.push_back({std::move(field), std::move(message)});
}

template <class... Args>
std::string str(const char* fmt, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

}  // namespace

std::vector<Violation> validate(const ScenarioConfig& config) {
  std::vector<Violation> v;
  const auto& c = config.constants;
  const auto& g = config.grid;
  const auto& p = config.pulse;
  const auto& pot = config.potential;

  check(v, c.hbar > 0.0, "constants.hbar", "hbar must be positive");
  check(v, c.mass > 0.0, "constants.mass", "mass must be positive");

  check(v, g.power_of_two(), "grid.n", str("point count %d is not a power of two", g.n()));
  check(v, g.n() >= 16, "grid.n", "grid too small");

  check(v, p.energy_mev > 0.0, "pulse.energy", "pulse energy must be positive");
  check(v, p.t_fwhm_ns > p.t_flat_ns, "pulse.t_fwhm", "t_fwhm must exceed t_flat");
  check(v, p.t_flat_ns >= 0.0, "pulse.t_flat", "t_flat must be non-negative");

  check(v, pot.v0_mev >= 0.0, "potential.v0", "barrier height must be non-negative");
  check(v, pot.coupling_energy_mev >= 0.0, "potential.coupling_energy", "coupling must be non-negative");
  check(v, pot.gamma_per_ns >= 0.0, "potential.gamma", "dissipation rate must be non-negative");
  check(v, pot.wg2_prebarrier_offset_mev >= 0.0, "potential.wg2_prebarrier_offset",
        "channel-2 offset must be non-negative");
  if (pot.barrier_width_um)
    check(v, *pot.barrier_width_um > 0.0, "potential.barrier_width", "finite width must be positive");

  check(v, config.dt_ns > 0.0, "dt", "time step must be positive");
  check(v, config.t_end_ns > 0.0, "t_end", "simulated span must be positive");
  check(v, config.frame_stride >= 1, "frame_stride", "frame stride must be at least 1");

  for (double x : config.probes_um)
    check(v, g.contains(x), "probes", str("probe at %g um lies outside the grid", x));

  if (!(c.mass > 0.0 && p.energy_mev > 0.0)) return v;

  // Resolution of the carrier wave.
  const double k_inc = p.carrier_wavenumber(c);
  const double lambda = 2.0 * std::numbers::pi / k_inc;
  check(v, g.dx() <= lambda / 16.0, "grid.dx",
        str("dx = %.4g um resolves the de Broglie wavelength %.4g um with fewer than 16 points",
            g.dx(), lambda));

  // Resolution of the fastest evanescent decay anywhere in the layout.
  double max_deficit = pot.v0_mev - p.energy_mev;
  if (pot.two_channel()) max_deficit = std::max(max_deficit, pot.wg2_prebarrier_offset_mev - p.energy_mev);
  if (max_deficit > 0.0) {
    const double kappa = std::sqrt(2.0 * c.mass * max_deficit) / c.hbar;
    check(v, g.dx() <= 1.0 / (10.0 * kappa), "grid.dx",
          str("dx = %.4g um resolves the decay length %.4g um with fewer than 10 points",
              g.dx(), 1.0 / kappa));
  }

  if (p.t_fwhm_ns > p.t_flat_ns) {
    const Envelope env = Envelope::from_pulse(p, c);
    check(v, env.edge_sigma_um >= 4.0 * g.dx(), "pulse.t_fwhm",
          "envelope edge is too sharp for the grid spacing");
    const double support = env.flat_half_width_um + 6.0 * env.edge_sigma_um;
    check(v, env.center_um - support >= g.x_min() && env.center_um + support <= g.x_max(),
          "pulse.center_position", "envelope wider than the grid box");
  }

  if (pot.semi_infinite()) {
    check(v, pot.cap.enabled, "potential.cap", "semi-infinite barrier requires the absorbing layer");
    if (pot.cap.enabled) {
      check(v, pot.cap.width_um > 0.0, "potential.cap.width", "absorber ramp length must be positive");
      check(v, pot.cap.strength_mev > 0.0, "potential.cap.strength", "absorber strength must be positive");
      check(v, pot.cap.onset_um < g.x_max(), "potential.cap.onset", "absorber starts outside the grid");

      double deepest = pot.barrier_start_um;
      for (double x : config.probes_um) deepest = std::max(deepest, x);
      const double delta = config.detuning_mev();
      const double slow_deficit =
          -delta - (pot.two_channel() ? pot.coupling_energy_mev : 0.0);
      double clearance;
      if (delta < 0.0 && slow_deficit > 0.0) {
        const double kappa_slow = std::sqrt(2.0 * c.mass * slow_deficit) / c.hbar;
        clearance = 40.0 / kappa_slow;
      } else {
        clearance = 40.0 * lambda;
      }
      check(v, pot.cap.onset_um >= deepest + clearance, "potential.cap.onset",
            str("absorber onset must sit at least %.4g um beyond the deepest probe (%.4g um)",
                clearance, deepest));
    }
  }

  return v;
}

}  // namespace tflow
