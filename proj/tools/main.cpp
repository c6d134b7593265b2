#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tunnelflow/presets.hpp"
#include "tunnelflow/report.hpp"
#include "tunnelflow/scenario_json.hpp"
#include "tunnelflow/units.hpp"

namespace {

int cmd_list() {
  std::printf("%-12s %10s %9s %13s  %s\n", "name", "detuning", "channels", "dissipation", "figure");
  std::printf("%-12s %10s %9s %13s\n", "", "(meV)", "", "(GHz)");
  for (const auto& p : tflow::all_presets()) {
    std::printf("%-12s %10.3g %9d %13.4g  %s\n", p.name.c_str(), p.detuning_mev(),
                p.config.channels(), p.config.potential.gamma_per_ns, p.figure.c_str());
  }
  return 0;
}

int report_violations(const tflow::ScenarioConfig& config) {
  const auto violations = tflow::validate(config);
  if (violations.empty()) return 0;
  for (const auto& v : violations) std::cerr << "violation: " << v.field << ": " << v.message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-domain simulator of quantum tunnelling: probability flow, Bohmian velocity "
               "and quantum potential inside square barriers"};
  app.require_subcommand(1);

  // run
  std::string preset_name, config_path, out_dir;
  std::optional<double> dt_ps;
  std::optional<int> grid_n;
  std::optional<int> frame_stride;
  auto* run = app.add_subcommand("run", "Run a preset or a scenario config and write CSV/JSON outputs");
  run->add_option("preset", preset_name, "Preset name (see `list`)");
  run->add_option("--config", config_path, "Scenario config JSON instead of a preset");
  run->add_option("--out", out_dir, "Output directory (default out/<preset|custom>)");
  run->add_option("--dt", dt_ps, "Override the time step, ps");
  run->add_option("--grid-n", grid_n, "Override the grid point count");
  run->add_option("--frame-stride", frame_stride, "Override the steps per emitted frame");

  auto* list = app.add_subcommand("list", "List the shipped presets");

  std::string validate_path;
  auto* val = app.add_subcommand("validate", "Validate a scenario config file");
  val->add_option("--config", validate_path, "Scenario config JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list();

    if (val->parsed()) {
      const auto config = tflow::load_scenario(validate_path);
      const int rc = report_violations(config);
      if (rc == 0) std::cout << "ok\n";
      return rc;
    }

    // run
    if (preset_name.empty() == config_path.empty()) {
      std::cerr << "run: give exactly one of <preset> or --config PATH\n";
      return 1;
    }

    tflow::Preset preset;
    if (!preset_name.empty()) {
      const tflow::Preset* p = tflow::find_preset(preset_name);
      if (!p) {
        std::cerr << "unknown preset \"" << preset_name << "\" (see `list`)\n";
        return 1;
      }
      preset = *p;
    } else {
      preset.name = "";
      preset.config = tflow::load_scenario(config_path);
      preset.frames_window = {preset.config.grid.x_min(), preset.config.grid.x_max(), 256};
    }

    if (dt_ps) preset.config.dt_ns = *dt_ps * tflow::units::ns_per_ps;
    if (frame_stride) preset.config.frame_stride = *frame_stride;
    if (grid_n)
      preset.config.grid = tflow::Grid(preset.config.grid.x_min(), preset.config.grid.x_max(), *grid_n);

    if (!preset.is_width_scan()) {
      const int rc = report_violations(preset.config);
      if (rc != 0) return rc;
    }

    if (out_dir.empty()) out_dir = "out/" + (preset.name.empty() ? std::string("custom") : preset.name);
    const tflow::RunOutputs outputs = tflow::execute_run(preset, out_dir);
    for (const auto& path : {outputs.width_scan_csv, outputs.frames_csv, outputs.probes_csv,
                             outputs.summary_json})
      if (!path.empty()) std::cout << "wrote " << path.string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
