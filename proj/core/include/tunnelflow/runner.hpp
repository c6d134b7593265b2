#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tunnelflow/density_fit.hpp"
#include "tunnelflow/observables.hpp"
#include "tunnelflow/scenario.hpp"

namespace tflow {

struct ProbeTrack {
  int channel = 0;
  double x_um = 0.0;
  std::vector<double> rho, v, q, v_eff;  // one entry per frame
};

struct DwellSeries {
  double x_lo_um = 0.0, x_hi_um = 0.0;
  std::vector<double> n_probability, j_in, tau_ns;
  std::vector<std::uint8_t> divergent;
};

struct DensitySnapshot {
  double t_ns = 0.0;
  std::vector<std::vector<double>> rho;  // [channel][x]
};

struct RunResult {
  std::vector<double> frame_t_ns;
  std::vector<ProbeTrack> probes;
  DwellSeries dwell;
  std::vector<DensitySnapshot> snapshots;
  std::optional<FitResult> fit;
  double fit_time_ns = 0.0;
  double initial_norm = 0.0;
  double final_norm = 0.0;
};

struct RunRequest {
  ScenarioConfig config;
  std::vector<double> snapshot_times_ns;  // capture rho(x) at the nearest frames
  std::optional<double> fit_time_ns;      // two-channel relative-density fit
  std::optional<FitWindow> fit_window;    // overrides the default 0.25-crossing window
  /// Optional streaming consumer for full frames (CSV export and the like).
  std::function<void(const ObservableFrame&, const Grid&)> frame_sink;
};

/// Validates, evolves and aggregates observables. Throws ConfigError-style
/// std::invalid_argument when the config does not validate.
RunResult run_scenario(const RunRequest& request);

}  // namespace tflow
