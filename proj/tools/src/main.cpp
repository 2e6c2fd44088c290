#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace ionwire::cli;

    CLI::App app{
        "ionwire — design calculator and simulator for wire-mediated "
        "coupling of trapped ions"};
    app.require_subcommand(1);

    RunManifest manifest;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", manifest.config_path, "system config file")
            ->required();
        cmd->add_option("-o,--output", manifest.output_path,
                        "output file; '-' or omitted writes to stdout");
        cmd->add_option("-f,--format", manifest.format, "csv, json or text");
    };

    CLI::App* validate =
        app.add_subcommand("validate", "check a config file and report problems");
    validate->add_option("-c,--config", manifest.config_path, "system config file")
        ->required();

    CLI::App* budget = app.add_subcommand(
        "budget",
        "coupling constant, exchange time, equivalent circuit and noise budget");
    add_common(budget);
    budget->add_flag("--dump-config", manifest.dump_config,
                     "echo the parsed config in base SI units and exit");

    CLI::App* simulate =
        app.add_subcommand("simulate", "time-domain simulation of the coupled pair");
    add_common(simulate);
    simulate->add_option("--mode", manifest.mode, "classical, quantum, rwa or circuit")
        ->capture_default_str();
    simulate
        ->add_option("--initial", manifest.initial,
                     "displaced:Y0_m | fock:N | coherent:RE[:IM]")
        ->capture_default_str();
    simulate->add_option("--tmax", manifest.tmax,
                         "time span [s]; 0 = two exchange periods");
    simulate->add_option("--samples", manifest.samples, "number of sample times")
        ->capture_default_str();
    simulate->add_option("--seed", manifest.seed,
                         "rng seed (reserved for stochastic extensions)");

    CLI::App* sweep =
        app.add_subcommand("sweep", "sweep design figures over one or two parameters");
    add_common(sweep);
    sweep
        ->add_option("--sweep", manifest.sweep,
                     "AXIS=START:STOP:STEPS[,AXIS2=...]; axes: H, h0, L, a, "
                     "omega, T, R, Rg, scale (base SI units)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input_error;
    }

    manifest.command = app.get_subcommands().front()->get_name();
    return run_command(manifest);
}
