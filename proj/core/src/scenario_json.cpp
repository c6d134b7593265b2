#include "tunnelflow/scenario_json.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace tflow {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
  }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!obj[key].is_number()) throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

double optional_number(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  return obj[key].get<double>();
}

}  // namespace

ScenarioConfig scenario_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  reject_unknown_keys(doc, {"constants", "grid", "pulse", "potential", "dt_ps", "t_end_ns",
                            "probes_um", "frame_stride"},
                      "scenario");

  ScenarioConfig cfg;

  if (doc.contains("constants")) {
    const json& c = doc["constants"];
    reject_unknown_keys(c, {"hbar_meV_ns", "mass_kg"}, "constants");
    const double mass_kg = require_number(c, "mass_kg", "constants");
    cfg.constants = PhysicalConstants::for_mass_kg(mass_kg);
    cfg.constants.hbar = optional_number(c, "hbar_meV_ns", cfg.constants.hbar);
  }

  if (!doc.contains("grid")) throw ConfigError("missing \"grid\"");
  {
    const json& g = doc["grid"];
    reject_unknown_keys(g, {"x_min_mm", "x_max_mm", "n"}, "grid");
    const double x_min = require_number(g, "x_min_mm", "grid") * units::um_per_mm;
    const double x_max = require_number(g, "x_max_mm", "grid") * units::um_per_mm;
    const int n = static_cast<int>(require_number(g, "n", "grid"));
    cfg.grid = Grid(x_min, x_max, n);
  }

  if (!doc.contains("pulse")) throw ConfigError("missing \"pulse\"");
  {
    const json& p = doc["pulse"];
    reject_unknown_keys(p, {"energy_meV", "t_fwhm_ns", "t_flat_ns", "center_position_mm"}, "pulse");
    cfg.pulse.energy_mev = require_number(p, "energy_meV", "pulse");
    cfg.pulse.t_fwhm_ns = require_number(p, "t_fwhm_ns", "pulse");
    cfg.pulse.t_flat_ns = require_number(p, "t_flat_ns", "pulse");
    cfg.pulse.center_um = require_number(p, "center_position_mm", "pulse") * units::um_per_mm;
  }

  if (!doc.contains("potential")) throw ConfigError("missing \"potential\"");
  {
    const json& p = doc["potential"];
    reject_unknown_keys(p,
                        {"v0_meV", "barrier_start_um", "barrier_width_um", "wg2_prebarrier_offset_meV",
                         "coupling_energy_ueV", "coupling_onset_um", "gamma_GHz", "cap"},
                        "potential");
    cfg.potential.v0_mev = require_number(p, "v0_meV", "potential");
    cfg.potential.barrier_start_um = optional_number(p, "barrier_start_um", 0.0);
    if (!p.contains("barrier_width_um")) throw ConfigError("missing \"barrier_width_um\" in potential");
    if (p["barrier_width_um"].is_string()) {
      if (p["barrier_width_um"].get<std::string>() != "semi_infinite")
        throw ConfigError("barrier_width_um must be a number or \"semi_infinite\"");
      cfg.potential.barrier_width_um.reset();
    } else {
      cfg.potential.barrier_width_um = p["barrier_width_um"].get<double>();
    }
    cfg.potential.wg2_prebarrier_offset_mev = optional_number(p, "wg2_prebarrier_offset_meV", 0.0);
    cfg.potential.coupling_energy_mev =
        optional_number(p, "coupling_energy_ueV", 0.0) * units::mev_per_uev;
    cfg.potential.coupling_onset_um = optional_number(p, "coupling_onset_um", 0.0);
    cfg.potential.gamma_per_ns = optional_number(p, "gamma_GHz", 0.0);
    if (p.contains("cap")) {
      const json& cap = p["cap"];
      reject_unknown_keys(cap, {"enabled", "onset_um", "width_um", "strength_meV"}, "cap");
      cfg.potential.cap.enabled = cap.value("enabled", true);
      cfg.potential.cap.onset_um = require_number(cap, "onset_um", "cap");
      cfg.potential.cap.width_um = require_number(cap, "width_um", "cap");
      cfg.potential.cap.strength_mev = require_number(cap, "strength_meV", "cap");
    }
  }

  if (!doc.contains("dt_ps")) throw ConfigError("missing \"dt_ps\"");
  cfg.dt_ns = doc["dt_ps"].get<double>() * units::ns_per_ps;
  if (!doc.contains("t_end_ns")) throw ConfigError("missing \"t_end_ns\"");
  cfg.t_end_ns = doc["t_end_ns"].get<double>();
  if (doc.contains("probes_um")) cfg.probes_um = doc["probes_um"].get<std::vector<double>>();
  cfg.frame_stride = static_cast<int>(optional_number(doc, "frame_stride", 20));

  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_from_json_text(text);
}

std::string scenario_to_json_text(const ScenarioConfig& config) {
  json doc;
  doc["constants"]["hbar_meV_ns"] = config.constants.hbar;
  doc["constants"]["mass_kg"] = mass_to_kg(config.constants.mass);
  doc["grid"]["x_min_mm"] = config.grid.x_min() / units::um_per_mm;
  doc["grid"]["x_max_mm"] = config.grid.x_max() / units::um_per_mm;
  doc["grid"]["n"] = config.grid.n();
  doc["pulse"]["energy_meV"] = config.pulse.energy_mev;
  doc["pulse"]["t_fwhm_ns"] = config.pulse.t_fwhm_ns;
  doc["pulse"]["t_flat_ns"] = config.pulse.t_flat_ns;
  doc["pulse"]["center_position_mm"] = config.pulse.center_um / units::um_per_mm;
  json& pot = doc["potential"];
  pot["v0_meV"] = config.potential.v0_mev;
  pot["barrier_start_um"] = config.potential.barrier_start_um;
  if (config.potential.barrier_width_um)
    pot["barrier_width_um"] = *config.potential.barrier_width_um;
  else
    pot["barrier_width_um"] = "semi_infinite";
  pot["wg2_prebarrier_offset_meV"] = config.potential.wg2_prebarrier_offset_mev;
  pot["coupling_energy_ueV"] = config.potential.coupling_energy_mev / units::mev_per_uev;
  pot["coupling_onset_um"] = config.potential.coupling_onset_um;
  pot["gamma_GHz"] = config.potential.gamma_per_ns;
  if (config.potential.cap.enabled) {
    pot["cap"]["enabled"] = true;
    pot["cap"]["onset_um"] = config.potential.cap.onset_um;
    pot["cap"]["width_um"] = config.potential.cap.width_um;
    pot["cap"]["strength_meV"] = config.potential.cap.strength_mev;
  }
  doc["dt_ps"] = config.dt_ns / units::ns_per_ps;
  doc["t_end_ns"] = config.t_end_ns;
  doc["probes_um"] = config.probes_um;
  doc["frame_stride"] = config.frame_stride;
  return doc.dump(2) + "\n";
}

void save_scenario(const ScenarioConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path.string());
  out << scenario_to_json_text(config);
}

}  // namespace tflow
