// Command-line front end: run experiment specs, solve for the required
// processing gain, or run one of the checked-in figure presets.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uavloc/errors.hpp"
#include "uavloc/experiment.hpp"
#include "uavloc/version.hpp"

#ifndef UAVLOC_PRESET_SOURCE_DIR
#define UAVLOC_PRESET_SOURCE_DIR ""
#endif

namespace {

struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::optional<long long> snapshots;
    std::optional<std::string> out;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Master seed (overrides mc.seed)");
    cmd->add_option("--snapshots", flags.snapshots, "Snapshot count (overrides mc.snapshots)");
    cmd->add_option("--workers", flags.workers,
                    "Worker threads (0 = all cores; never changes results)");
    cmd->add_option("--out", flags.out, "Output CSV path (overrides output.path)");
}

uavloc::RunOverrides to_overrides(const CommonFlags& flags) {
    uavloc::RunOverrides ov;
    ov.seed = flags.seed;
    ov.snapshots = flags.snapshots;
    ov.out_path = flags.out;
    ov.workers = flags.workers;
    return ov;
}

void print_summary(const uavloc::RunSummary& s) {
    std::cout << "wrote " << s.n_rows << " rows to " << s.csv_path << " (meta: " << s.meta_path
              << ", " << s.seconds << " s)\n";
}

std::string find_preset(const std::string& name, const std::string& dir_flag) {
    namespace fs = std::filesystem;
    const std::string file = name + ".spec";
    std::vector<fs::path> candidates;
    if (!dir_flag.empty()) {
        candidates.push_back(fs::path(dir_flag) / file);
    } else {
        candidates.push_back(fs::path("presets") / file);
        if (UAVLOC_PRESET_SOURCE_DIR[0] != '\0') {
            candidates.push_back(fs::path(UAVLOC_PRESET_SOURCE_DIR) / file);
        }
    }
    for (const fs::path& c : candidates) {
        if (fs::exists(c)) return c.string();
    }
    throw uavloc::ConfigError("preset '" + name + "' not found (looked for " + file +
                              " under ./presets; use --dir to point at the preset directory)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo simulator for the localizability of cellular-connected UAVs"};
    app.set_version_flag("--version", UAVLOC_VERSION);
    app.require_subcommand(1);

    // simulate
    std::string sim_spec_path;
    CommonFlags sim_flags;
    CLI::App* sim = app.add_subcommand("simulate", "Run a sweep spec and write the P_B table");
    sim->add_option("spec", sim_spec_path, "Experiment spec file")->required();
    add_common(sim, sim_flags);

    // gain
    std::string gain_spec_path;
    CommonFlags gain_flags;
    std::optional<double> gain_beta, gain_target;
    CLI::App* gain = app.add_subcommand("gain", "Solve for the required processing gain");
    gain->add_option("spec", gain_spec_path, "Experiment spec file")->required();
    gain->add_option("--beta", gain_beta, "Post-processing SINR requirement in dB");
    gain->add_option("--target", gain_target, "Target P_B, in (0, 1)");
    add_common(gain, gain_flags);

    // preset
    std::string preset_name, preset_dir;
    CommonFlags preset_flags;
    CLI::App* preset = app.add_subcommand("preset", "Run a checked-in figure preset");
    preset->add_option("name", preset_name, "Preset name (fig1..fig5)")->required();
    preset->add_option("--dir", preset_dir, "Directory holding the preset spec files");
    add_common(preset, preset_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const uavloc::ExperimentSpec spec = uavloc::parse_spec_file(sim_spec_path);
            print_summary(uavloc::run_experiment(spec, to_overrides(sim_flags)));
        } else if (gain->parsed()) {
            uavloc::ExperimentSpec spec = uavloc::parse_spec_file(gain_spec_path);
            if (gain_beta) spec.gain_beta_db = gain_beta;
            if (gain_target) spec.gain_target_pb = gain_target;
            print_summary(uavloc::run_gain_solver(spec, to_overrides(gain_flags)));
        } else if (preset->parsed()) {
            const std::string path = find_preset(preset_name, preset_dir);
            const uavloc::ExperimentSpec spec = uavloc::parse_spec_file(path);
            const uavloc::RunOverrides ov = to_overrides(preset_flags);
            if (spec.gain_beta_db || spec.gain_target_pb) {
                print_summary(uavloc::run_gain_solver(spec, ov));
            } else {
                print_summary(uavloc::run_experiment(spec, ov));
            }
        }
    } catch (const uavloc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
