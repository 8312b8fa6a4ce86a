#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "helab/evolution.hpp"
#include "helab/grid.hpp"
#include "helab/state.hpp"

namespace helab {

// Named scenario with numeric parameters, as it appears in config files.
struct ScenarioSpec {
    std::string name;
    std::map<std::string, double> parameters;
};

struct OutputSpec {
    std::string path;           // empty = stdout
    std::string format = "csv"; // "csv" or "json"
};

struct RunConfig {
    GridSpec grid{16, 6.283185307179586};
    ScenarioSpec scenario;
    EvolutionConfig evolution;
    std::vector<std::string> diagnostics;  // subset of the known functional names
    OutputSpec output;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& known_diagnostics();

// JSON <-> RunConfig. Unknown scenario names, unknown diagnostic names,
// invalid grid/evolution parameters, or malformed JSON raise ConfigError.
// to_json(from_json(x)) is lossless.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::string& path);

// Instantiate the configured scenario on the configured grid.
MaxwellState build_scenario(const GridSpec& grid, const ScenarioSpec& scenario);

}  // namespace helab
