#include "tunnelflow/presets.hpp"

namespace tflow {

namespace {

constexpr double kMassKg = 6.95e-36;
constexpr double kBarrierMeV = 0.538;
constexpr double kCouplingMeV = 0.02622;  // 26.22 ueV
constexpr double kFwhmNs = 1.14;
constexpr double kFlatNs = 0.86;
constexpr double kDtNs = 5.0e-5;  // 0.05 ps
constexpr double kTEndNs = 2.18;
constexpr int kGridN = 1 << 18;
constexpr double kGammaPerNs = 1.0 / 0.27;  // lifetime 270 ps
constexpr double kCapStrengthMeV = 2.0;
constexpr double kCapWidthUm = 1000.0;

ScenarioConfig base_1d(double energy_mev, double half_box_um, double center_um, double cap_onset_um,
                       std::vector<double> probes) {
  ScenarioConfig cfg;
  cfg.constants = PhysicalConstants::for_mass_kg(kMassKg);
  cfg.grid = Grid(-half_box_um, half_box_um, kGridN);
  cfg.pulse = {energy_mev, kFwhmNs, kFlatNs, center_um};
  cfg.potential.v0_mev = kBarrierMeV;
  cfg.potential.barrier_start_um = 0.0;
  cfg.potential.barrier_width_um.reset();  // semi-infinite, absorber-terminated
  cfg.potential.cap = {true, cap_onset_um, kCapWidthUm, kCapStrengthMeV};
  cfg.dt_ns = kDtNs;
  cfg.t_end_ns = kTEndNs;
  cfg.probes_um = std::move(probes);
  cfg.frame_stride = 20;
  return cfg;
}

ScenarioConfig base_coupled(double detuning_mev, double half_box_um, double center_um,
                            double coupling_onset_um, double cap_onset_um, std::vector<double> probes) {
  // The coupled system shifts the effective barrier top: Delta = E - V0 + hbar*C0.
  const double energy = kBarrierMeV - kCouplingMeV + detuning_mev;
  ScenarioConfig cfg = base_1d(energy, half_box_um, center_um, cap_onset_um, std::move(probes));
  cfg.potential.wg2_prebarrier_offset_mev = 2.0 * kBarrierMeV;
  cfg.potential.coupling_energy_mev = kCouplingMeV;
  cfg.potential.coupling_onset_um = coupling_onset_um;
  return cfg;
}

ScenarioConfig convergence_scenario(double dt_ns, int frame_stride) {
  ScenarioConfig cfg;
  cfg.constants = PhysicalConstants::for_mass_kg(kMassKg);
  cfg.grid = Grid(-4000.0, 4000.0, 1 << 14);
  cfg.pulse = {0.438, 0.30, 0.15, -900.0};
  cfg.potential.v0_mev = kBarrierMeV;
  cfg.potential.barrier_width_um = 10.0;
  cfg.dt_ns = dt_ns;
  cfg.t_end_ns = 0.5;
  cfg.probes_um = {1.0, 3.0};
  cfg.frame_stride = frame_stride;
  return cfg;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> ps;

  {
    Preset p;
    p.name = "fig2a";
    p.figure = "2a";
    p.summary = "1D, detuning +0.1 meV: propagating flow above the barrier";
    p.config = base_1d(0.638, 13930.0, -6960.0, 2100.0, {0.425, 128.79, 256.30});
    p.frames_window = {-200.0, 2100.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig2b";
    p.figure = "2b";
    p.summary = "1D, zero detuning: slow critical relaxation";
    p.config = base_1d(0.538, 12790.0, -6400.0, 900.0, {0.39, 39.42, 78.45});
    p.frames_window = {-200.0, 600.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig2b-long";
    p.figure = "2b (extended)";
    p.summary = "1D, zero detuning, flat-top stretched to 4.3 ns";
    p.config = base_1d(0.538, 32000.0, -14966.0, 900.0, {0.39, 39.42, 78.45});
    p.config.pulse.t_fwhm_ns = 4.58;
    p.config.pulse.t_flat_ns = 4.30;
    p.config.t_end_ns = 4.90;
    p.frames_window = {-200.0, 600.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig2c";
    p.figure = "2c, 5b";
    p.summary = "1D, detuning -0.1 meV: evanescent freezing";
    p.config = base_1d(0.438, 11540.0, -5770.0, 300.0, {0.35, 2.82, 8.45});
    p.frames_window = {-100.0, 20.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig2d";
    p.figure = "2d";
    p.summary = "1D, detuning -0.1 meV with 270 ps lifetime: steady trickle";
    p.config = base_1d(0.438, 11540.0, -5770.0, 300.0, {0.35, 2.82, 8.45});
    p.config.potential.gamma_per_ns = kGammaPerNs;
    p.frames_window = {-100.0, 20.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig3b";
    p.figure = "3b";
    p.summary = "coupled waveguides, detuning +0.1 meV";
    p.config = base_coupled(0.1, 13930.0, -6960.0, 1.25, 2100.0, {40.37, 123.62});
    p.frames_window = {-50.0, 300.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig3c";
    p.figure = "3c";
    p.summary = "coupled waveguides, zero detuning";
    p.config = base_coupled(0.0, 12790.0, -6400.0, 1.14, 1000.0, {28.55, 149.99});
    p.frames_window = {-50.0, 400.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig3d";
    p.figure = "3d";
    p.summary = "coupled waveguides, detuning -0.1 meV: all five probes freeze";
    p.config = base_coupled(-0.1, 11540.0, -5770.0, 1.02, 350.0, {2.05, 5.46, 13.32});
    p.frames_window = {-50.0, 25.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig3e";
    p.figure = "3e";
    p.summary = "coupled waveguides, detuning -0.1 meV with 270 ps lifetime";
    p.config = base_coupled(-0.1, 11540.0, -5770.0, 1.02, 350.0, {2.05, 5.46, 13.32});
    p.config.potential.gamma_per_ns = kGammaPerNs;
    p.frames_window = {-50.0, 25.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig4";
    p.figure = "4";
    p.summary = "coupled waveguides, detuning -0.1 meV: relative-density parabola fit";
    p.config = base_coupled(-0.1, 11540.0, -5770.0, 1.02, 350.0, {1.37, 2.05, 5.46, 13.32});
    p.frames_window = {-50.0, 25.0, 256};
    p.fit_time_ns = 1.09;
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig5ab";
    p.figure = "5a (5b comes from fig2c)";
    p.summary = "1D, detuning +0.1 meV: effective-potential probes deep in the barrier";
    p.config = base_1d(0.638, 13930.0, -6960.0, 2100.0, {106.71, 212.37});
    p.frames_window = {-50.0, 300.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "fig5c";
    p.figure = "5c";
    p.summary = "analytic steady-velocity dependence on barrier width, detuning -0.05 meV";
    p.config = base_1d(0.488, 11540.0, -5770.0, 450.0, {});
    p.width_scan = WidthScanSpec{0.488, kBarrierMeV, {0.1, 0.3, 0.5, 0.7, 0.9}, 0.1, 100.0, 400};
    p.frames_window = {-100.0, 100.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "conv-dt05";
    p.figure = "convergence";
    p.summary = "reduced tunnelling scenario at the default 0.05 ps step";
    p.config = convergence_scenario(5.0e-5, 20);
    p.frames_window = {-100.0, 15.0, 256};
    ps.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "conv-dt025";
    p.figure = "convergence";
    p.summary = "same scenario with the time step halved";
    p.config = convergence_scenario(2.5e-5, 40);
    p.frames_window = {-100.0, 15.0, 256};
    ps.push_back(std::move(p));
  }

  return ps;
}

}  // namespace

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = build_presets();
  return presets;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : all_presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace tflow
