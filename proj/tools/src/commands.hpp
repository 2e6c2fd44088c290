#pragma once

#include <cstdint>
#include <string>

namespace ionwire::cli {

/// Everything one invocation needs; filled from the command line. With the
/// same manifest and config file, every command is byte-deterministic.
struct RunManifest {
    std::string command;       // budget | simulate | sweep | validate
    std::string config_path;
    std::string output_path;   // empty or "-" = stdout
    std::string format;        // csv | json | text (default depends on command)
    std::string mode = "classical";      // simulate: classical|quantum|rwa|circuit
    std::string initial = "displaced:1e-9";  // simulate: fock:N | coherent:RE[:IM] | displaced:Y0
    double tmax = 0.0;         // simulate horizon [s]; 0 = two exchange periods
    int samples = 200;         // simulate sample count
    std::string sweep;         // sweep: AXIS=START:STOP:STEPS[,AXIS2=...]
    std::uint64_t seed = 0;    // reserved for randomized sweep grids
    bool dump_config = false;  // budget: echo the parsed config and exit
};

// Exit codes shared by all commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_blocking = 2;
inline constexpr int exit_numerical = 3;

int cmd_validate(const RunManifest& manifest);
int cmd_budget(const RunManifest& manifest);
int cmd_simulate(const RunManifest& manifest);
int cmd_sweep(const RunManifest& manifest);

/// Dispatches on manifest.command.
int run_command(const RunManifest& manifest);

}  // namespace ionwire::cli
