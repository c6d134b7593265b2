#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tunnelflow/scenario.hpp"

namespace tflow {

/// Spatial window and column budget for the frames.csv export.
struct FrameWindowSpec {
  double x_lo_um = 0.0;
  double x_hi_um = 0.0;
  int max_columns = 256;
};

/// Analytic steady-velocity scan over barrier widths (no time evolution).
struct WidthScanSpec {
  double energy_mev = 0.0;
  double barrier_mev = 0.0;
  std::vector<double> fractions;  // sample depth as a fraction of the width
  double a_min_um = 0.0;
  double a_max_um = 0.0;
  int n_widths = 0;
};

struct Preset {
  std::string name;
  std::string figure;
  std::string summary;
  ScenarioConfig config;
  FrameWindowSpec frames_window;
  std::optional<double> fit_time_ns;       // density-ratio fit timestamp (two-channel runs)
  std::optional<WidthScanSpec> width_scan; // set for the analytic scan preset

  bool is_width_scan() const { return width_scan.has_value(); }
  double detuning_mev() const { return config.detuning_mev(); }
};

const std::vector<Preset>& all_presets();
const Preset* find_preset(std::string_view name);

}  // namespace tflow
