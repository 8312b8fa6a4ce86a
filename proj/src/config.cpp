#include "helab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "helab/scenarios.hpp"

namespace helab {

namespace {

const std::set<std::string>& known_scenarios() {
    static const std::set<std::string> names = {"zero",     "circular", "linear",
                                               "standing", "random",   "hopfion"};
    return names;
}

// Per-scenario parameter vocabulary; anything else in a config is a typo.
const std::map<std::string, std::set<std::string>>& scenario_parameter_names() {
    static const std::map<std::string, std::set<std::string>> names = {
        {"zero", {}},
        {"circular", {"mx", "my", "mz", "amplitude", "handedness"}},
        {"linear", {"mx", "my", "mz", "amplitude", "polarization_angle"}},
        {"standing", {"mx", "my", "mz", "amplitude"}},
        {"random", {"seed", "cutoff", "amplitude"}},
        {"hopfion", {"scale"}},
    };
    return names;
}

void require_object(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (allowed.find(it.key()) == allowed.end())
            throw ConfigError(where + ": unknown key \"" + it.key() + "\"");
}

double number_at(const nlohmann::json& j, const std::string& key, double fallback,
                 const std::string& where) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
    return v.get<double>();
}

int integer_at(const nlohmann::json& j, const std::string& key, int fallback,
               const std::string& where) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    return v.get<int>();
}

std::string string_at(const nlohmann::json& j, const std::string& key,
                      const std::string& fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    const nlohmann::json& v = j.at(key);
    if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

int scenario_int(const std::map<std::string, double>& params, const std::string& key,
                 int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    double v = it->second;
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
        throw ConfigError("scenario parameter \"" + key + "\" must be an integer");
    return static_cast<int>(v);
}

double scenario_number(const std::map<std::string, double>& params, const std::string& key,
                       double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

}  // namespace

const std::vector<std::string>& known_diagnostics() {
    static const std::vector<std::string> names = {"energy", "chi_mag",     "chi_el",
                                                   "chi_cs", "eb_integral", "n_diff"};
    return names;
}

RunConfig config_from_json(const nlohmann::json& j) {
    require_object(j, "config");
    reject_unknown_keys(
        j, {"grid", "scenario", "evolution", "diagnostics", "output", "seed"}, "config");

    RunConfig cfg;

    if (j.contains("grid")) {
        const nlohmann::json& g = j.at("grid");
        require_object(g, "config.grid");
        reject_unknown_keys(g, {"n", "box_length"}, "config.grid");
        int n = integer_at(g, "n", 16, "config.grid");
        double box = number_at(g, "box_length", 6.283185307179586, "config.grid");
        cfg.grid = GridSpec(n, box);  // validates
    }

    cfg.scenario.name = "zero";
    if (j.contains("scenario")) {
        const nlohmann::json& s = j.at("scenario");
        require_object(s, "config.scenario");
        reject_unknown_keys(s, {"name", "parameters"}, "config.scenario");
        cfg.scenario.name = string_at(s, "name", "zero", "config.scenario");
        if (known_scenarios().find(cfg.scenario.name) == known_scenarios().end())
            throw ConfigError("config.scenario.name: unknown scenario \"" + cfg.scenario.name +
                              "\"");
        if (s.contains("parameters")) {
            const nlohmann::json& p = s.at("parameters");
            require_object(p, "config.scenario.parameters");
            const auto& allowed = scenario_parameter_names().at(cfg.scenario.name);
            for (auto it = p.begin(); it != p.end(); ++it) {
                if (allowed.find(it.key()) == allowed.end())
                    throw ConfigError("config.scenario.parameters: \"" + it.key() +
                                      "\" is not a parameter of scenario \"" +
                                      cfg.scenario.name + "\"");
                if (!it.value().is_number())
                    throw ConfigError("config.scenario.parameters." + it.key() +
                                      " must be a number");
                cfg.scenario.parameters[it.key()] = it.value().get<double>();
            }
        }
    }

    if (j.contains("evolution")) {
        const nlohmann::json& e = j.at("evolution");
        require_object(e, "config.evolution");
        reject_unknown_keys(e, {"dt", "t_final", "integrator", "sample_every"},
                            "config.evolution");
        cfg.evolution.dt = number_at(e, "dt", cfg.evolution.dt, "config.evolution");
        cfg.evolution.t_final =
            number_at(e, "t_final", cfg.evolution.t_final, "config.evolution");
        cfg.evolution.integrator =
            integrator_from_name(string_at(e, "integrator", "exact", "config.evolution"));
        cfg.evolution.sample_every =
            integer_at(e, "sample_every", cfg.evolution.sample_every, "config.evolution");
        if (!(cfg.evolution.dt > 0.0) || !std::isfinite(cfg.evolution.dt))
            throw ConfigError("config.evolution.dt must be positive and finite");
        if (!(cfg.evolution.t_final >= 0.0) || !std::isfinite(cfg.evolution.t_final))
            throw ConfigError("config.evolution.t_final must be >= 0 and finite");
        if (cfg.evolution.sample_every < 1)
            throw ConfigError("config.evolution.sample_every must be >= 1");
    }

    cfg.diagnostics = known_diagnostics();
    if (j.contains("diagnostics")) {
        const nlohmann::json& d = j.at("diagnostics");
        if (!d.is_array()) throw ConfigError("config.diagnostics must be an array of names");
        cfg.diagnostics.clear();
        for (const auto& item : d) {
            if (!item.is_string())
                throw ConfigError("config.diagnostics entries must be strings");
            std::string name = item.get<std::string>();
            const auto& known = known_diagnostics();
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw ConfigError("config.diagnostics: unknown functional \"" + name + "\"");
            cfg.diagnostics.push_back(name);
        }
    }

    if (j.contains("output")) {
        const nlohmann::json& o = j.at("output");
        require_object(o, "config.output");
        reject_unknown_keys(o, {"path", "format"}, "config.output");
        cfg.output.path = string_at(o, "path", "", "config.output");
        cfg.output.format = string_at(o, "format", "csv", "config.output");
        if (cfg.output.format != "csv" && cfg.output.format != "json")
            throw ConfigError("config.output.format must be \"csv\" or \"json\"");
    }

    if (j.contains("seed")) {
        const nlohmann::json& s = j.at("seed");
        if (!s.is_number_unsigned() && !s.is_number_integer())
            throw ConfigError("config.seed must be a non-negative integer");
        if (s.is_number_integer() && !s.is_number_unsigned() && s.get<long long>() < 0)
            throw ConfigError("config.seed must be a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }

    return cfg;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["grid"] = {{"n", cfg.grid.n}, {"box_length", cfg.grid.box_length}};
    j["scenario"] = {{"name", cfg.scenario.name},
                     {"parameters", nlohmann::json::object()}};
    for (const auto& [key, value] : cfg.scenario.parameters)
        j["scenario"]["parameters"][key] = value;
    j["evolution"] = {{"dt", cfg.evolution.dt},
                      {"t_final", cfg.evolution.t_final},
                      {"integrator", integrator_name(cfg.evolution.integrator)},
                      {"sample_every", cfg.evolution.sample_every}};
    j["diagnostics"] = cfg.diagnostics;
    j["output"] = {{"path", cfg.output.path}, {"format", cfg.output.format}};
    j["seed"] = cfg.seed;
    return j;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

MaxwellState build_scenario(const GridSpec& grid, const ScenarioSpec& scenario) {
    const auto& params = scenario.parameters;
    if (scenario.name == "zero") {
        return MaxwellState{grid, VectorField(grid), VectorField(grid), 0.0};
    }
    if (scenario.name == "circular") {
        std::array<int, 3> m = {scenario_int(params, "mx", 0), scenario_int(params, "my", 0),
                                scenario_int(params, "mz", 1)};
        return circular_plane_wave(grid, m, scenario_number(params, "amplitude", 1.0),
                                   scenario_int(params, "handedness", 1));
    }
    if (scenario.name == "linear") {
        std::array<int, 3> m = {scenario_int(params, "mx", 0), scenario_int(params, "my", 0),
                                scenario_int(params, "mz", 1)};
        return linear_plane_wave(grid, m, scenario_number(params, "amplitude", 1.0),
                                 scenario_number(params, "polarization_angle", 0.0));
    }
    if (scenario.name == "standing") {
        std::array<int, 3> m = {scenario_int(params, "mx", 0), scenario_int(params, "my", 0),
                                scenario_int(params, "mz", 1)};
        return standing_wave(grid, m, scenario_number(params, "amplitude", 1.0));
    }
    if (scenario.name == "random") {
        return random_transverse(grid,
                                 static_cast<std::uint64_t>(scenario_int(params, "seed", 1)),
                                 scenario_int(params, "cutoff", 3),
                                 scenario_number(params, "amplitude", 1.0));
    }
    if (scenario.name == "hopfion") {
        return hopfion(grid, scenario_number(params, "scale", 1.0 / 14.0));
    }
    throw ConfigError("unknown scenario \"" + scenario.name + "\"");
}

}  // namespace helab
