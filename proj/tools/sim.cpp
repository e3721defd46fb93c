// Command-line front end: scenario-driven parameter scans with reproducible
// CSV output.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical or physicality
// error, 3 verification failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mollowsim/errors.hpp"
#include "mollowsim/scans.hpp"
#include "mollowsim/scenario.hpp"

namespace {

using namespace mollowsim;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

int run_table_command(const std::string& config_path,
                      const std::string& out_path,
                      const std::function<ScanResult(const Scenario&)>& runner) {
    Scenario scenario;
    try {
        scenario = load_scenario(config_path);
    } catch (const ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 1;
    }
    try {
        const ScanResult table = runner(scenario);
        return write_output(format_table(table, scenario.output), out_path);
    } catch (const ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial interference of strongly driven two-level emitters "
                 "in a structured electromagnetic reservoir"};
    app.require_subcommand(1);

    struct Command {
        CLI::App* sub = nullptr;
        std::string config;
        std::string out;
    };

    auto add_table_command = [&](const std::string& name,
                                 const std::string& help) {
        auto cmd = std::make_shared<Command>();
        cmd->sub = app.add_subcommand(name, help);
        cmd->sub->add_option("--config", cmd->config, "scenario file (JSON)")
            ->required();
        cmd->sub->add_option("--out", cmd->out,
                             "output file (default: stdout)");
        return cmd;
    };

    auto steady = add_table_command(
        "steady", "Steady state, populations and band visibilities");
    auto scan_eta = add_table_command(
        "scan-eta",
        "Central-band visibility against the sideband asymmetry eta");
    auto pattern = add_table_command(
        "pattern", "Angular interference pattern of a spectral band");
    auto g2 = add_table_command(
        "g2", "Second-order correlations (diagonal, map or weak_field)");
    auto evolve_cmd =
        add_table_command("evolve", "Time evolution of the Bloch vector");
    auto validate = add_table_command(
        "validate", "Strong-field and geometry validity diagnostics");

    CLI::App* verify =
        app.add_subcommand("verify", "Run the oracle verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 1;
    }

    if (verify->parsed()) {
        const int failures = run_verify(std::cout);
        return failures == 0 ? 0 : 3;
    }
    if (steady->sub->parsed())
        return run_table_command(steady->config, steady->out, run_steady);
    if (scan_eta->sub->parsed())
        return run_table_command(scan_eta->config, scan_eta->out,
                                 run_scan_eta);
    if (pattern->sub->parsed())
        return run_table_command(pattern->config, pattern->out, run_pattern);
    if (g2->sub->parsed())
        return run_table_command(g2->config, g2->out, run_g2);
    if (evolve_cmd->sub->parsed())
        return run_table_command(evolve_cmd->config, evolve_cmd->out,
                                 run_evolve);
    if (validate->sub->parsed()) {
        Scenario scenario;
        try {
            scenario = load_scenario(validate->config);
            return write_output(run_validate(scenario), validate->out);
        } catch (const ConfigError& err) {
            std::cerr << "config error: " << err.what() << "\n";
            return 1;
        } catch (const std::exception& err) {
            std::cerr << "error: " << err.what() << "\n";
            return 2;
        }
    }
    return 1;
}
