#include <cstdio>
#include <fstream>

#include <doctest.h>
#include <json.hpp>

#include "helab/config.hpp"
#include "helab/helicity.hpp"
#include "helab/scenarios.hpp"

using namespace helab;
using nlohmann::json;

TEST_CASE("defaults materialize from an empty object") {
    RunConfig cfg = config_from_json(json::object());
    CHECK(cfg.grid.n == 16);
    CHECK(cfg.grid.box_length == doctest::Approx(6.283185307179586));
    CHECK(cfg.scenario.name == "zero");
    CHECK(cfg.evolution.dt == doctest::Approx(0.1));
    CHECK(cfg.evolution.t_final == doctest::Approx(1.0));
    CHECK(cfg.evolution.integrator == Integrator::exact);
    CHECK(cfg.evolution.sample_every == 1);
    CHECK(cfg.diagnostics == known_diagnostics());
    CHECK(cfg.output.path.empty());
    CHECK(cfg.output.format == "csv");
    CHECK(cfg.seed == 1);
}

TEST_CASE("round trip through JSON is lossless") {
    json j = {
        {"grid", {{"n", 32}, {"box_length", 12.5}}},
        {"scenario",
         {{"name", "circular"},
          {"parameters",
           {{"mx", 0.0}, {"my", 1.0}, {"mz", 2.0}, {"amplitude", 0.7}, {"handedness", -1.0}}}}},
        {"evolution",
         {{"dt", 0.05}, {"t_final", 7.5}, {"integrator", "rk4"}, {"sample_every", 4}}},
        {"diagnostics", {"energy", "chi_cs"}},
        {"output", {{"path", "out.csv"}, {"format", "json"}}},
        {"seed", 99},
    };
    RunConfig cfg = config_from_json(j);
    CHECK(cfg.grid.n == 32);
    CHECK(cfg.scenario.name == "circular");
    CHECK(cfg.scenario.parameters.at("handedness") == doctest::Approx(-1.0));
    CHECK(cfg.evolution.integrator == Integrator::rk4);
    CHECK(cfg.output.format == "json");
    CHECK(cfg.seed == 99);

    RunConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.grid.n == cfg.grid.n);
    CHECK(back.grid.box_length == cfg.grid.box_length);
    CHECK(back.scenario.name == cfg.scenario.name);
    CHECK(back.scenario.parameters == cfg.scenario.parameters);
    CHECK(back.evolution.dt == cfg.evolution.dt);
    CHECK(back.evolution.t_final == cfg.evolution.t_final);
    CHECK(back.evolution.integrator == cfg.evolution.integrator);
    CHECK(back.evolution.sample_every == cfg.evolution.sample_every);
    CHECK(back.diagnostics == cfg.diagnostics);
    CHECK(back.output.path == cfg.output.path);
    CHECK(back.output.format == cfg.output.format);
    CHECK(back.seed == cfg.seed);
}

TEST_CASE("malformed configurations are rejected with ConfigError") {
    CHECK_THROWS_AS(config_from_json(json::array()), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"unknown_key", 1}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"grid", {{"n", 16}, {"stray", 1}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"grid", {{"n", 15}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"grid", {{"box_length", -1.0}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"scenario", {{"name", "vortex"}}}}), ConfigError);
    CHECK_THROWS_AS(
        config_from_json(json{{"scenario", {{"name", "circular"}, {"parameters", {{"spin", 1.0}}}}}}),
        ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"evolution", {{"dt", 0.0}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"evolution", {{"dt", -0.5}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"evolution", {{"integrator", "leapfrog"}}}}),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"evolution", {{"sample_every", 0}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"diagnostics", {"energy", "entropy"}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"output", {{"format", "xml"}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(json{{"seed", -3}}), ConfigError);
}

TEST_CASE("mode parameters must be integers") {
    json j = {{"scenario",
               {{"name", "circular"},
                {"parameters", {{"mx", 0.0}, {"my", 0.0}, {"mz", 1.5}, {"amplitude", 1.0}}}}}};
    RunConfig cfg = config_from_json(j);
    CHECK_THROWS_AS(build_scenario(cfg.grid, cfg.scenario), ConfigError);
}

TEST_CASE("build_scenario dispatches every named scenario") {
    GridSpec g(16, 6.283185307179586);

    MaxwellState zero = build_scenario(g, {"zero", {}});
    CHECK(max_abs(zero.E) == 0.0);
    CHECK(max_abs(zero.B) == 0.0);

    ScenarioSpec circ{"circular",
                      {{"mx", 0}, {"my", 0}, {"mz", 1}, {"amplitude", 1.0}, {"handedness", 1}}};
    MaxwellState sc = build_scenario(g, circ);
    MaxwellState ref = circular_plane_wave(g, {0, 0, 1}, 1.0, +1);
    double gap = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < sc.E.comp[c].size(); ++i)
            gap = std::max(gap, std::abs(sc.E.comp[c][i] - ref.E.comp[c][i]));
    CHECK(gap == 0.0);

    // Defaults: mode (0,0,1), amplitude 1, handedness +1.
    MaxwellState sc_default = build_scenario(g, {"circular", {}});
    gap = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < sc_default.E.comp[c].size(); ++i)
            gap = std::max(gap, std::abs(sc_default.E.comp[c][i] - ref.E.comp[c][i]));
    CHECK(gap == 0.0);

    MaxwellState lin = build_scenario(
        g, {"linear", {{"mx", 1}, {"my", 0}, {"mz", 0}, {"amplitude", 0.5},
                       {"polarization_angle", 0.3}}});
    CHECK(energy(lin) == doctest::Approx(0.25 * g.volume() / 2.0).epsilon(1e-12));

    MaxwellState stand = build_scenario(g, {"standing", {{"amplitude", 2.0}}});
    CHECK(energy(stand) == doctest::Approx(4.0 * g.volume()).epsilon(1e-12));

    MaxwellState rnd = build_scenario(g, {"random", {{"seed", 7}, {"cutoff", 2}, {"amplitude", 1.0}}});
    MaxwellState rnd_ref = random_transverse(g, 7, 2, 1.0);
    gap = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < rnd.E.comp[c].size(); ++i)
            gap = std::max(gap, std::abs(rnd.E.comp[c][i] - rnd_ref.E.comp[c][i]));
    CHECK(gap == 0.0);
}

TEST_CASE("load_config surfaces filesystem and parse failures as ConfigError") {
    CHECK_THROWS_AS(load_config("/nonexistent/path/config.json"), ConfigError);

    std::string path = "/tmp/helab_bad_config_test.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_config(path), ConfigError);
    std::remove(path.c_str());
}
