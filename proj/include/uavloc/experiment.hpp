#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavloc/localizability.hpp"

namespace uavloc {

/// A parsed experiment description: a base configuration, one swept
/// parameter, an optional secondary axis, and the B values to report.
struct ExperimentSpec {
    SimConfig base{};
    std::string sweep_param;          // alpha | h_ut | b | p
    std::vector<double> sweep_values;
    std::string group_param;          // optional secondary axis: alpha | h_ut | p
    std::vector<double> group_values;
    std::vector<int> b_values{4};
    std::optional<double> gain_beta_db;   // presence selects the gain solver
    std::optional<double> gain_target_pb;
    std::string output_path = "results.csv";
    std::string format = "csv";
};

/// Parse a flat key = value spec file (dotted keys, '#' comments).
/// Unknown keys and malformed values raise ConfigError naming the key.
ExperimentSpec parse_spec_file(const std::string& path);
ExperimentSpec parse_spec_text(const std::string& text, const std::string& origin);

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<long long> snapshots;
    std::optional<std::string> out_path;
    int workers = 0; // <= 0: hardware concurrency
};

struct RunSummary {
    std::string csv_path;
    std::string meta_path;
    std::size_t n_rows = 0;
    double seconds = 0.0;
};

/// Run the sweep and write the P_B table: one CSV row per (group value,
/// sweep value, B) with columns alpha_db, h_ut_m, B, p, q, pb, ci_low,
/// ci_high, n_snapshots, plus a JSON sidecar at `<output>.meta` holding the
/// fully resolved configuration. Data rows are byte-identical across reruns
/// with the same seed.
RunSummary run_experiment(const ExperimentSpec& spec, const RunOverrides& overrides = {});

/// Run the processing-gain solver over the sweep (sweep.param must be `b`
/// or `h_ut`): columns h_ut_m, B, beta_db, target_pb, alpha_star_db,
/// gamma_db. Unsolvable points get `nan` in the last two columns.
RunSummary run_gain_solver(const ExperimentSpec& spec, const RunOverrides& overrides = {});

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

} // namespace uavloc
