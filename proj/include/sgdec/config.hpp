#ifndef SGDEC_CONFIG_HPP
#define SGDEC_CONFIG_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgdec/boundary.hpp"
#include "sgdec/grid.hpp"
#include "sgdec/model.hpp"
#include "sgdec/stepper.hpp"

namespace sgdec {

/// Carries every validation problem found, not just the first.
struct ConfigError : std::runtime_error {
    std::vector<std::string> errors;
    explicit ConfigError(std::vector<std::string> errs);
};

struct ProbeConfig {
    std::string name;
    std::string what; // phi | phi_x | phi_t | J | E | rho | energy | energy_window | Q | residual
    double x = 0.0;
    double a = 0.0, b = 0.0; // energy_window
    int stride = 1;
};

struct TrackConfig {
    int stride = 25;
    double merge_radius = 2.0;
};

struct OutputConfig {
    std::string dir;
    int snapshots = 500;
    std::string heatmap = "phi_x"; // phi | phi_x | phi_t | none
};

struct SimulationConfig {
    std::string name;
    SpacetimeGrid grid;
    PhysicsModel model;
    InitialCondition ic = ZeroIc{};
    BoundarySpec boundary;
    double T = 0.0;
    std::vector<ProbeConfig> probes;
    std::optional<TrackConfig> track;
    OutputConfig output;
    nlohmann::json raw; // the validated document
};

/// Parses and fully validates a config document (schema_version 1). Unknown
/// keys are rejected; all errors are reported together.
SimulationConfig load_config(const nlohmann::json& doc);
SimulationConfig load_config_file(const std::string& path);

/// Applies `path=value` overrides (dotted paths, values parsed as JSON when
/// possible, else taken as strings) to a config document.
nlohmann::json apply_overrides(nlohmann::json doc, std::span<const std::string> overrides);

/// Named presets reproducing the reference scenarios. preset_json returns the
/// full config document; unknown names throw std::out_of_range.
std::vector<std::string> preset_names();
nlohmann::json preset_json(const std::string& name);
std::string preset_description(const std::string& name);

} // namespace sgdec

#endif
