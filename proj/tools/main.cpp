// edgemarket: all-pay-auction edge-computing market simulator.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "edgemarket/commands.hpp"

int main(int argc, char** argv) {
    using edgemarket::CommandOverrides;

    CLI::App app{"All-pay-auction edge-computing market simulator"};
    app.require_subcommand(1);

    CommandOverrides overrides;
    std::string report_path;

    auto add_common = [&](CLI::App* cmd, bool sweep_flags) {
        cmd->add_option("--config", overrides.config_path, "experiment config file (JSON)");
        cmd->add_option("--seed", overrides.seed, "master seed");
        cmd->add_option("--users", overrides.users, "number of end users N");
        cmd->add_option("--output", overrides.output_path, "result file path");
        cmd->add_option("--format", overrides.format, "result format: csv or json");
        if (sweep_flags) {
            cmd->add_option("--trials", overrides.trials, "Monte Carlo trials per grid point");
            cmd->add_option("--fit-degree", overrides.fit_degree, "fit polynomial degree");
        }
    };

    auto* simulate = app.add_subcommand("simulate", "run one market round at fixed (N, M)");
    add_common(simulate, false);
    simulate->add_option("--servers", overrides.servers, "number of servers M");

    auto* sweep = app.add_subcommand(
        "sweep", "sweep server counts, fit the revenue curve, report the optimum");
    add_common(sweep, true);

    auto* report = app.add_subcommand("report", "print a plot-ready table for a sweep result");
    report->add_option("result", report_path, "sweep result file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return edgemarket::kExitConfig;
    }

    if (simulate->parsed()) {
        return edgemarket::cmd_simulate(overrides, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        return edgemarket::cmd_sweep(overrides, std::cout, std::cerr);
    }
    return edgemarket::cmd_report(report_path, std::cout, std::cerr);
}
