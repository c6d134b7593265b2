#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "tunnelflow/scenario.hpp"

namespace tflow {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the scenario document. Every quantity carries an explicit unit
/// suffix in its key (v0_meV, dt_ps, ...); unknown keys are rejected so unit
/// typos cannot pass silently.
ScenarioConfig scenario_from_json_text(const std::string& text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

std::string scenario_to_json_text(const ScenarioConfig& config);
void save_scenario(const ScenarioConfig& config, const std::filesystem::path& path);

}  // namespace tflow
