#include "tunnelflow/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "tunnelflow/scenario_json.hpp"

namespace tflow {

using json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

ProbeStats plateau_stats(const ProbeTrack& track, std::span<const double> frame_t,
                         const PlateauWindow& window) {
  ProbeStats s;
  s.channel = track.channel;
  s.x_um = track.x_um;
  s.min_v = std::numeric_limits<double>::infinity();
  s.max_v = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < frame_t.size(); ++i) {
    const double t = frame_t[i];
    if (t < window.t_lo_ns || t > window.t_hi_ns) continue;
    const double v = track.v[i];
    if (!std::isfinite(v)) continue;
    ++s.n_frames;
    s.mean_v += v;
    s.mean_abs_v += std::abs(v);
    s.min_v = std::min(s.min_v, v);
    s.max_v = std::max(s.max_v, v);
    s.mean_rho += track.rho[i];
    if (std::isfinite(track.q[i])) s.mean_q += track.q[i];
    if (std::isfinite(track.v_eff[i])) s.mean_v_eff += track.v_eff[i];
  }
  if (s.n_frames > 0) {
    const double inv = 1.0 / s.n_frames;
    s.mean_v *= inv;
    s.mean_abs_v *= inv;
    s.mean_rho *= inv;
    s.mean_q *= inv;
    s.mean_v_eff *= inv;
  } else {
    s.min_v = s.max_v = 0.0;
  }
  return s;
}

FramesCsvWriter::FramesCsvWriter(std::ostream& out, const Grid& grid, int channels,
                                 const FrameWindowSpec& window)
    : out_(out) {
  int lo = 0;
  while (lo < grid.n() && grid.x(lo) < window.x_lo_um) ++lo;
  int hi = grid.n() - 1;
  while (hi > lo && grid.x(hi) > window.x_hi_um) --hi;
  const int span = hi - lo + 1;
  const int stride = std::max(1, (span + window.max_columns - 1) / window.max_columns);
  for (int i = lo; i <= hi; i += stride) columns_.push_back(i);

  out_ << "t_ns,x_um";
  for (int ch = 1; ch <= channels; ++ch)
    out_ << ",rho" << ch << "_per_um,j" << ch << "_per_ns,v" << ch << "_km_s,q" << ch << "_meV,veff"
         << ch << "_meV";
  out_ << "\n";
}

void FramesCsvWriter::write(const ObservableFrame& frame, const Grid& grid) {
  for (int i : columns_) {
    out_ << format_number(frame.t_ns) << ',' << format_number(grid.x(i));
    for (const auto& ch : frame.channels)
      out_ << ',' << format_number(ch.rho[i]) << ',' << format_number(ch.j[i]) << ','
           << format_number(ch.v[i]) << ',' << format_number(ch.q[i]) << ','
           << format_number(ch.v_eff[i]);
    out_ << '\n';
  }
}

void write_probes_csv(std::ostream& out, const RunResult& result) {
  out << "t_ns";
  for (const auto& track : result.probes) {
    const std::string tag = "_ch" + std::to_string(track.channel + 1) + "_x" +
                            format_number(track.x_um) + "um";
    out << ",rho" << tag << "_per_um"
        << ",v" << tag << "_km_s"
        << ",q" << tag << "_meV"
        << ",veff" << tag << "_meV";
  }
  out << "\n";
  for (size_t f = 0; f < result.frame_t_ns.size(); ++f) {
    out << format_number(result.frame_t_ns[f]);
    for (const auto& track : result.probes)
      out << ',' << format_number(track.rho[f]) << ',' << format_number(track.v[f]) << ','
          << format_number(track.q[f]) << ',' << format_number(track.v_eff[f]);
    out << '\n';
  }
}

void write_width_scan_csv(std::ostream& out, const WidthScanTable& table) {
  out << "width_um";
  for (double f : table.fractions) out << ",v_at_" << format_number(f) << "a_km_s";
  out << "\n";
  for (size_t i = 0; i < table.widths_um.size(); ++i) {
    out << format_number(table.widths_um[i]);
    for (size_t c = 0; c < table.fractions.size(); ++c) out << ',' << format_number(table.v_km_s[c][i]);
    out << '\n';
  }
}

void write_summary_json(std::ostream& out, const std::string& preset_name,
                        const ScenarioConfig& config, const RunResult& result,
                        const PlateauWindow& window) {
  json doc;
  doc["preset"] = preset_name.empty() ? json() : json(preset_name);
  doc["config"] = json::parse(scenario_to_json_text(config));
  doc["plateau_window_ns"] = {window.t_lo_ns, window.t_hi_ns};
  doc["norm"] = {{"initial", result.initial_norm},
                 {"final", result.final_norm},
                 {"relative_drift", result.final_norm / result.initial_norm - 1.0}};

  doc["probes"] = json::array();
  for (const auto& track : result.probes) {
    const ProbeStats s = plateau_stats(track, result.frame_t_ns, window);
    json p;
    p["channel"] = s.channel + 1;
    p["x_um"] = s.x_um;
    p["plateau_frames"] = s.n_frames;
    p["plateau_mean_v_km_s"] = s.mean_v;
    p["plateau_mean_abs_v_km_s"] = s.mean_abs_v;
    p["plateau_min_v_km_s"] = s.min_v;
    p["plateau_max_v_km_s"] = s.max_v;
    p["plateau_mean_rho_per_um"] = s.mean_rho;
    p["plateau_mean_q_meV"] = s.mean_q;
    p["plateau_mean_veff_meV"] = s.mean_v_eff;
    doc["probes"].push_back(std::move(p));
  }

  {
    double mean_n = 0.0, mean_j = 0.0;
    int count = 0, divergent = 0;
    for (size_t f = 0; f < result.frame_t_ns.size(); ++f) {
      const double t = result.frame_t_ns[f];
      if (t < window.t_lo_ns || t > window.t_hi_ns) continue;
      ++count;
      mean_n += result.dwell.n_probability[f];
      mean_j += result.dwell.j_in[f];
      divergent += result.dwell.divergent[f] ? 1 : 0;
    }
    json d;
    d["x_lo_um"] = result.dwell.x_lo_um;
    d["x_hi_um"] = result.dwell.x_hi_um;
    if (count > 0) {
      mean_n /= count;
      mean_j /= count;
      d["plateau_mean_N"] = mean_n;
      d["plateau_mean_j_in_per_ns"] = mean_j;
      d["plateau_divergent_fraction"] = static_cast<double>(divergent) / count;
      if (mean_j != 0.0) d["plateau_tau_ns"] = mean_n / mean_j;
    }
    doc["dwell"] = std::move(d);
  }

  if (result.fit) {
    const FitResult& fit = *result.fit;
    json f;
    f["t_ns"] = result.fit_time_ns;
    f["ok"] = fit.ok;
    if (fit.ok) {
      f["v_km_s"] = fit.v_km_s;
      f["x0_um"] = fit.x0_um;
      f["r_squared"] = fit.r_squared;
    } else {
      f["failure"] = fit.failure;
    }
    f["window_um"] = {fit.window.x_lo_um, fit.window.x_hi_um};
    f["n_points"] = fit.n_points;
    doc["fit"] = std::move(f);
  }

  out << doc.dump(2) << "\n";
}

RunOutputs execute_run(const Preset& preset, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  RunOutputs paths;

  if (preset.is_width_scan()) {
    const WidthScanSpec& ws = *preset.width_scan;
    const Regime regime = classify(ws.energy_mev, ws.barrier_mev, preset.config.constants);
    const WidthScanTable table =
        velocity_vs_width_table(regime, ws.fractions, ws.a_min_um, ws.a_max_um, ws.n_widths);
    paths.width_scan_csv = out_dir / "widthscan.csv";
    std::ofstream out(paths.width_scan_csv);
    write_width_scan_csv(out, table);
    return paths;
  }

  paths.frames_csv = out_dir / "frames.csv";
  paths.probes_csv = out_dir / "probes.csv";
  paths.summary_json = out_dir / "summary.json";

  std::ofstream frames_out(paths.frames_csv);
  FramesCsvWriter frames(frames_out, preset.config.grid, preset.config.channels(),
                         preset.frames_window);

  RunRequest request;
  request.config = preset.config;
  request.fit_time_ns = preset.fit_time_ns;
  request.frame_sink = [&frames](const ObservableFrame& f, const Grid& g) { frames.write(f, g); };

  const RunResult result = run_scenario(request);

  std::ofstream probes_out(paths.probes_csv);
  write_probes_csv(probes_out, result);
  std::ofstream summary_out(paths.summary_json);
  write_summary_json(summary_out, preset.name, preset.config, result);
  return paths;
}

}  // namespace tflow
