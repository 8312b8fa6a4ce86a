// Command-line front end: run a scenario and record the diagnostic time
// series, run the invariant battery, or sweep the duality angle.
//
// Exit codes: 0 success (and all checks passed), 1 check failure,
// 2 configuration error, 3 numerical divergence.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "helab/checks.hpp"
#include "helab/config.hpp"
#include "helab/evolution.hpp"
#include "helab/io.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string output_override;
    std::string format_override;
    bool have_output = false;
    bool have_format = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Path to the JSON configuration")
        ->required();
    cmd->add_option("--output", args.output_override,
                    "Write results here instead of the configured path")
        ->trigger_on_parse()
        ->each([&args](const std::string&) { args.have_output = true; });
    cmd->add_option("--format", args.format_override,
                    "Output format override: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->trigger_on_parse()
        ->each([&args](const std::string&) { args.have_format = true; });
}

helab::RunConfig configure(const CommonArgs& args) {
    helab::RunConfig cfg = helab::load_config(args.config_path);
    if (args.have_output) cfg.output.path = args.output_override;
    if (args.have_format) cfg.output.format = args.format_override;
    return cfg;
}

int do_run(const CommonArgs& args) {
    helab::RunConfig cfg = configure(args);
    helab::MaxwellState initial = helab::build_scenario(cfg.grid, cfg.scenario);
    std::vector<helab::DiagnosticsRecord> series = helab::run(initial, cfg.evolution);

    std::string text;
    if (cfg.output.format == "csv") {
        std::ostringstream os;
        helab::write_series_csv(os, series);
        text = os.str();
    } else {
        text = helab::series_to_json(series).dump(2) + "\n";
    }
    helab::write_text_output(cfg.output.path, text, std::cout);
    return 0;
}

int do_check(const CommonArgs& args) {
    helab::RunConfig cfg = configure(args);
    if (args.have_format && args.format_override == "csv")
        throw helab::ConfigError("check reports are emitted as json only");
    std::vector<helab::CheckResult> results = helab::run_checks(cfg);
    helab::write_text_output(cfg.output.path, helab::checks_to_json(results).dump(2) + "\n",
                             std::cout);
    return helab::all_passed(results) ? 0 : 1;
}

int do_scan(const CommonArgs& args, int angles) {
    helab::RunConfig cfg = configure(args);
    std::vector<helab::ScanRow> rows = helab::duality_scan(cfg, angles);

    std::string text;
    if (cfg.output.format == "csv") {
        std::ostringstream os;
        helab::write_scan_csv(os, rows);
        text = os.str();
    } else {
        text = helab::scan_to_json(rows).dump(2) + "\n";
    }
    helab::write_text_output(cfg.output.path, text, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"helicity-lab: spectral vacuum electromagnetism on a periodic box"};
    app.require_subcommand(1);

    CommonArgs run_args, check_args, scan_args;
    int angles = 16;

    CLI::App* run_cmd =
        app.add_subcommand("run", "Evolve a scenario and write the diagnostic time series");
    add_common(run_cmd, run_args);

    CLI::App* check_cmd =
        app.add_subcommand("check", "Run the invariant battery and write a JSON report");
    add_common(check_cmd, check_args);

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "Sweep the duality angle over [0, 2pi) and tabulate");
    add_common(scan_cmd, scan_args);
    scan_cmd->add_option("--angles", angles, "Number of angles in the sweep")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_args);
        if (check_cmd->parsed()) return do_check(check_args);
        if (scan_cmd->parsed()) return do_scan(scan_args, angles);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const helab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const helab::TruncationError& e) {
        // The configured grid cannot represent the requested scenario.
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const helab::DivergenceError& e) {
        std::cerr << "numerical divergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
