#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tunnelflow/presets.hpp"
#include "tunnelflow/runner.hpp"
#include "tunnelflow/stationary.hpp"

namespace tflow {

/// Statistics window inside the pulse flat-top, trimmed of edge transients.
struct PlateauWindow {
  double t_lo_ns = 0.95;
  double t_hi_ns = 1.60;
};

struct ProbeStats {
  int channel = 0;
  double x_um = 0.0;
  int n_frames = 0;
  double mean_v = 0.0, mean_abs_v = 0.0, min_v = 0.0, max_v = 0.0;
  double mean_rho = 0.0, mean_q = 0.0, mean_v_eff = 0.0;
};

ProbeStats plateau_stats(const ProbeTrack& track, std::span<const double> frame_t,
                         const PlateauWindow& window = {});

/// Streams decimated frame rows: t, x and the per-channel fields.
class FramesCsvWriter {
 public:
  FramesCsvWriter(std::ostream& out, const Grid& grid, int channels, const FrameWindowSpec& window);
  void write(const ObservableFrame& frame, const Grid& grid);

 private:
  std::ostream& out_;
  std::vector<int> columns_;  // grid indices to emit
};

void write_probes_csv(std::ostream& out, const RunResult& result);
void write_width_scan_csv(std::ostream& out, const WidthScanTable& table);
void write_summary_json(std::ostream& out, const std::string& preset_name,
                        const ScenarioConfig& config, const RunResult& result,
                        const PlateauWindow& window = {});

/// Deterministic shortest-ish decimal formatting shared by every export.
std::string format_number(double value);

struct RunOutputs {
  std::filesystem::path frames_csv;
  std::filesystem::path probes_csv;
  std::filesystem::path summary_json;
  std::filesystem::path width_scan_csv;  // analytic scan presets only
};

/// Executes a preset (or ad-hoc config) and writes the full artifact set.
RunOutputs execute_run(const Preset& preset, const std::filesystem::path& out_dir);

}  // namespace tflow
