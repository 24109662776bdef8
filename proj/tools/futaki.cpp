#include "futaki/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace futaki;

int execute(cli::Command command, const std::string& catalog, const std::string& scenario_path,
            const cli::RunOptions& options, cli::Format format) {
    cli::Output out;
    try {
        if (command == cli::Command::catalog) {
            out = cli::run_catalog();
        } else {
            if (catalog.empty() == scenario_path.empty())
                throw UsageError("exactly one of --catalog and --scenario is required");
            const ScenarioFile file = catalog.empty() ? load_scenario_file(scenario_path) : load_catalog(catalog);
            out = cli::run(command, file, options);
        }
    } catch (const Error& e) {
        out = cli::error_output(e);
        std::cerr << out.text;
        if (format == cli::Format::structured) std::cout << out.structured;
        return out.exit_code;
    }
    std::cout << cli::emit(out, format);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coupled Futaki invariant: localization, toric oracle, vanishing locus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string catalog;
    std::string scenario_path;
    std::string param_value;
    std::string samples;
    std::string root_width;
    std::string format = "text";
    std::string direction;
    bool serial = false;

    app.add_option("--catalog", catalog, "Built-in scenario name (see the catalog command)");
    app.add_option("--scenario", scenario_path, "Scenario JSON file");
    app.add_option("--param-value", param_value, "Rational parameter value, e.g. 3/8");
    app.add_option("--samples", samples, "Sample count, or a comma-separated list of rationals");
    app.add_option("--root-width", root_width, "Isolating interval width (default 1/10^12)");
    app.add_option("--format", format, "text, structured or csv")->check(CLI::IsMember({"text", "structured", "json", "csv"}));
    app.add_option("--direction", direction, "Moment direction, e.g. 0,0,0,1");
    app.add_flag("--serial", serial, "Run kernels on the serial reference path");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"localize", "Localized volumes, numerators, Fut and its roots"},
        {"toric", "Moment-polytope volumes, moments, Fut and the Minkowski check"},
        {"roots", "Isolate the roots of Fut on the validity interval"},
        {"verify", "Cross-validate localized and toric Fut (exit 5 on mismatch)"},
        {"sample", "Exact samples of Fut for plotting"},
        {"validate", "Check scenario invariants"},
        {"catalog", "List built-in scenarios"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : futaki::cli::exit_code(futaki::ErrorCategory::usage);
    }

    futaki::cli::RunOptions options;
    futaki::cli::Format fmt = futaki::cli::Format::text;
    futaki::cli::Command command = futaki::cli::Command::catalog;
    try {
        command = futaki::cli::parse_command(app.get_subcommands().front()->get_name());
        fmt = futaki::cli::parse_format(format);
        if (!param_value.empty()) options.param_value = futaki::Rational::parse(param_value);
        if (!samples.empty()) futaki::cli::parse_samples(samples, options);
        if (!root_width.empty()) options.root_width = futaki::Rational::parse(root_width);
        if (!direction.empty()) options.direction = futaki::cli::parse_direction(direction);
        if (serial) options.exec = futaki::Execution::serial;
    } catch (const futaki::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return futaki::cli::exit_code(futaki::ErrorCategory::usage);
    }
    return execute(command, catalog, scenario_path, options, fmt);
}
