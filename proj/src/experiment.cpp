#include "uavloc/experiment.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uavloc/errors.hpp"
#include "uavloc/version.hpp"

namespace uavloc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("value for '" + key + "' is not a number: '" + token + "'");
    }
}

// A value list is whitespace/comma separated numbers; "lo:step:hi" expands
// to an inclusive grid.
std::vector<double> parse_value_list(const std::string& raw, const std::string& key) {
    std::string normalized = raw;
    for (char& c : normalized) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(normalized);
    std::vector<double> values;
    std::string token;
    while (in >> token) {
        const auto c1 = token.find(':');
        if (c1 != std::string::npos) {
            const auto c2 = token.find(':', c1 + 1);
            if (c2 == std::string::npos) {
                throw ConfigError("range value for '" + key + "' must be lo:step:hi, got '" +
                                  token + "'");
            }
            const double lo = parse_number(token.substr(0, c1), key);
            const double step = parse_number(token.substr(c1 + 1, c2 - c1 - 1), key);
            const double hi = parse_number(token.substr(c2 + 1), key);
            if (!(step > 0.0) || hi < lo) {
                throw ConfigError("range for '" + key + "' must have step > 0 and hi >= lo");
            }
            const long long count = std::llround((hi - lo) / step);
            for (long long k = 0; k <= count; ++k) {
                const double v = lo + static_cast<double>(k) * step;
                if (v > hi + 1e-9 * std::max(1.0, std::fabs(hi))) break;
                values.push_back(v);
            }
        } else {
            values.push_back(parse_number(token, key));
        }
    }
    return values;
}

int parse_int(const std::string& token, const std::string& key) {
    const double v = parse_number(token, key);
    const double rounded = std::round(v);
    if (std::fabs(v - rounded) > 1e-9) {
        throw ConfigError("value for '" + key + "' must be an integer, got '" + token + "'");
    }
    return static_cast<int>(rounded);
}

std::string normalize_param(std::string name) {
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return name;
}

bool is_axis_param(const std::string& name) {
    return name == "alpha" || name == "h_ut" || name == "b" || name == "p";
}

void apply_axis(SimConfig& cfg, const std::string& param, double value) {
    if (param == "alpha") {
        cfg.alpha_db = value;
    } else if (param == "h_ut") {
        cfg.h_ut_m = value;
    } else if (param == "p") {
        cfg.p = value;
    }
    // "b" is applied through the B list, not the config
}

std::vector<int> to_b_list(const std::vector<double>& values, const std::string& key) {
    std::vector<int> out;
    out.reserve(values.size());
    for (double v : values) {
        const double rounded = std::round(v);
        if (std::fabs(v - rounded) > 1e-9 || rounded < 1.0) {
            throw ConfigError("values for '" + key + "' must be integers >= 1");
        }
        out.push_back(static_cast<int>(rounded));
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("output.path is not writable: " + path);
    return out;
}

nlohmann::json config_to_json(const SimConfig& cfg) {
    return nlohmann::json{
        {"layout", {{"isd_m", cfg.isd_m}, {"tiers", cfg.tiers}, {"h_bs_m", cfg.bs_height_m}}},
        {"channel",
         {{"fc_ghz", cfg.channel.fc_ghz},
          {"los_shadow_a_db", cfg.channel.los_shadow_a_db},
          {"los_shadow_b_per_m", cfg.channel.los_shadow_b_per_m},
          {"nlos_shadow_std_db", cfg.channel.nlos_shadow_std_db}}},
        {"radio",
         {{"tx_power_dbm", cfg.radio.tx_power_dbm},
          {"bandwidth_hz", cfg.radio.bandwidth_hz},
          {"noise_figure_db", cfg.radio.noise_figure_db},
          {"noise_power_dbm", cfg.radio.noise_power_dbm()}}},
        {"uav", {{"h_ut_m", cfg.h_ut_m}}},
        {"sinr", {{"alpha_db", cfg.alpha_db}, {"beta_db", cfg.beta_db}}},
        {"activity", {{"p", cfg.p}, {"q", cfg.q}}},
        {"mc", {{"snapshots", cfg.n_snapshots}, {"seed", cfg.seed}}},
        {"sites", cfg.site_count()},
    };
}

void write_meta(const std::string& csv_path, const std::string& command,
                const ExperimentSpec& spec, const SimConfig& resolved, int workers,
                std::size_t n_rows) {
    nlohmann::json meta{
        {"tool", "uavloc"},
        {"version", UAVLOC_VERSION},
        {"command", command},
        {"csv", csv_path},
        {"rows", n_rows},
        {"config", config_to_json(resolved)},
        {"sweep", {{"param", spec.sweep_param}, {"values", spec.sweep_values}}},
        {"b_list", spec.b_values},
        {"workers_requested", workers},
        {"common_random_numbers",
         "the master seed is reused for every sweep/group value and solver evaluation"},
    };
    if (!spec.group_param.empty()) {
        meta["group"] = {{"param", spec.group_param}, {"values", spec.group_values}};
    }
    if (spec.gain_beta_db) meta["gain"]["beta_db"] = *spec.gain_beta_db;
    if (spec.gain_target_pb) meta["gain"]["target_pb"] = *spec.gain_target_pb;

    const std::string meta_path = csv_path + ".meta";
    std::ofstream out = open_output(meta_path);
    out << meta.dump(2) << "\n";
}

void validate_axis_values(const std::string& key, const std::string& param,
                          const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) throw ConfigError(key + " contains a non-finite value");
        if (param == "h_ut" && !(v > 0.0)) throw ConfigError(key + ": h_ut values must be > 0");
        if (param == "p" && !(v >= 0.0 && v <= 1.0)) {
            throw ConfigError(key + ": p values must be in [0, 1]");
        }
    }
}

} // namespace

ExperimentSpec parse_spec_text(const std::string& text, const std::string& origin) {
    ExperimentSpec spec;
    bool b_list_given = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        }

        SimConfig& cfg = spec.base;
        if (key == "layout.isd_m") {
            cfg.isd_m = parse_number(value, key);
        } else if (key == "layout.tiers") {
            cfg.tiers = parse_int(value, key);
        } else if (key == "layout.h_bs_m") {
            cfg.bs_height_m = parse_number(value, key);
        } else if (key == "channel.fc_ghz") {
            cfg.channel.fc_ghz = parse_number(value, key);
        } else if (key == "channel.los_shadow_a_db") {
            cfg.channel.los_shadow_a_db = parse_number(value, key);
        } else if (key == "channel.los_shadow_b_per_m") {
            cfg.channel.los_shadow_b_per_m = parse_number(value, key);
        } else if (key == "channel.nlos_shadow_std_db") {
            cfg.channel.nlos_shadow_std_db = parse_number(value, key);
        } else if (key == "radio.tx_power_dbm") {
            cfg.radio.tx_power_dbm = parse_number(value, key);
        } else if (key == "radio.bandwidth_hz") {
            cfg.radio.bandwidth_hz = parse_number(value, key);
        } else if (key == "radio.noise_figure_db") {
            cfg.radio.noise_figure_db = parse_number(value, key);
        } else if (key == "uav.h_ut_m") {
            cfg.h_ut_m = parse_number(value, key);
        } else if (key == "sinr.alpha_db") {
            cfg.alpha_db = parse_number(value, key);
        } else if (key == "sinr.beta_db") {
            cfg.beta_db = parse_number(value, key);
        } else if (key == "activity.p") {
            cfg.p = parse_number(value, key);
        } else if (key == "activity.q") {
            cfg.q = parse_number(value, key);
        } else if (key == "mc.snapshots") {
            cfg.n_snapshots = static_cast<long long>(parse_number(value, key));
        } else if (key == "mc.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_number(value, key));
        } else if (key == "b.list") {
            spec.b_values = to_b_list(parse_value_list(value, key), key);
            b_list_given = true;
        } else if (key == "sweep.param") {
            spec.sweep_param = normalize_param(value);
        } else if (key == "sweep.values") {
            spec.sweep_values = parse_value_list(value, key);
        } else if (key == "group.param") {
            spec.group_param = normalize_param(value);
        } else if (key == "group.values") {
            spec.group_values = parse_value_list(value, key);
        } else if (key == "gain.beta_db") {
            spec.gain_beta_db = parse_number(value, key);
        } else if (key == "gain.target_pb") {
            spec.gain_target_pb = parse_number(value, key);
        } else if (key == "output.path") {
            spec.output_path = value;
        } else if (key == "output.format") {
            spec.format = value;
        } else {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }

    if (spec.format != "csv") {
        throw ConfigError("output.format must be 'csv' (got '" + spec.format + "')");
    }
    if (spec.sweep_param.empty()) throw ConfigError("sweep.param is required");
    if (!is_axis_param(spec.sweep_param)) {
        throw ConfigError("sweep.param must be one of alpha, h_ut, b, p (got '" +
                          spec.sweep_param + "')");
    }
    if (spec.sweep_values.empty()) throw ConfigError("sweep.values must be non-empty");
    validate_axis_values("sweep.values", spec.sweep_param, spec.sweep_values);

    if (!spec.group_param.empty()) {
        if (spec.group_param == "b" || !is_axis_param(spec.group_param)) {
            throw ConfigError("group.param must be one of alpha, h_ut, p (got '" +
                              spec.group_param + "')");
        }
        if (spec.group_param == spec.sweep_param) {
            throw ConfigError("group.param must differ from sweep.param");
        }
        if (spec.group_values.empty()) throw ConfigError("group.values must be non-empty");
        validate_axis_values("group.values", spec.group_param, spec.group_values);
    } else if (!spec.group_values.empty()) {
        throw ConfigError("group.values given without group.param");
    }

    if (spec.sweep_param == "b" && b_list_given) {
        throw ConfigError("b.list conflicts with sweep.param = b; drop one of them");
    }
    return spec;
}

ExperimentSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

RunSummary run_experiment(const ExperimentSpec& spec_in, const RunOverrides& overrides) {
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentSpec spec = spec_in;
    if (overrides.seed) spec.base.seed = *overrides.seed;
    if (overrides.snapshots) spec.base.n_snapshots = *overrides.snapshots;
    if (overrides.out_path) spec.output_path = *overrides.out_path;
    spec.base.validate();

    const bool sweep_is_alpha = spec.sweep_param == "alpha";
    const bool sweep_is_b = spec.sweep_param == "b";
    const bool group_set = !spec.group_param.empty();
    const bool group_is_alpha = spec.group_param == "alpha";

    const std::vector<double> alpha_axis = sweep_is_alpha   ? spec.sweep_values
                                           : group_is_alpha ? spec.group_values
                                                            : std::vector<double>{spec.base.alpha_db};
    const std::vector<int> b_axis =
        sweep_is_b ? to_b_list(spec.sweep_values, "sweep.values") : spec.b_values;
    if (b_axis.empty()) throw ConfigError("b.list must be non-empty");

    // Each combination of non-alpha axis values costs one pass over the
    // snapshot set; the alpha axis rides along for free on shared snapshots.
    const std::size_t n_group = group_set ? spec.group_values.size() : 1;
    const std::size_t n_sweep = spec.sweep_values.size();
    const std::size_t outer_groups = (group_set && !group_is_alpha) ? n_group : 1;
    const std::size_t outer_sweeps = (!sweep_is_alpha && !sweep_is_b) ? n_sweep : 1;

    std::map<std::pair<std::size_t, std::size_t>, PbGrid> grids;
    for (std::size_t og = 0; og < outer_groups; ++og) {
        for (std::size_t os = 0; os < outer_sweeps; ++os) {
            SimConfig cfg = spec.base;
            if (group_set && !group_is_alpha) {
                apply_axis(cfg, spec.group_param, spec.group_values[og]);
            }
            if (!sweep_is_alpha && !sweep_is_b) {
                apply_axis(cfg, spec.sweep_param, spec.sweep_values[os]);
            }
            grids.emplace(std::make_pair(og, os),
                          estimate_pb_grid(cfg, alpha_axis, b_axis, overrides.workers));
        }
    }

    std::ofstream out = open_output(spec.output_path);
    out << "alpha_db,h_ut_m,B,p,q,pb,ci_low,ci_high,n_snapshots\n";

    std::size_t n_rows = 0;
    auto emit_row = [&](std::size_t gi, std::size_t si, const PbGrid& grid,
                        std::size_t alpha_idx, std::size_t b_idx) {
        SimConfig row_cfg = spec.base;
        if (group_set) apply_axis(row_cfg, spec.group_param, spec.group_values[gi]);
        apply_axis(row_cfg, spec.sweep_param, spec.sweep_values[si]);
        const double alpha_db = alpha_axis.size() > 1 || sweep_is_alpha || group_is_alpha
                                    ? grid.alphas_db[alpha_idx]
                                    : row_cfg.alpha_db;
        const PbEstimate& est = grid.cell(alpha_idx, b_idx);
        out << format_double(alpha_db) << ',' << format_double(row_cfg.h_ut_m) << ','
            << grid.b_values[b_idx] << ',' << format_double(row_cfg.p) << ','
            << format_double(row_cfg.q) << ',' << format_double(est.pb) << ','
            << format_double(est.ci_low) << ',' << format_double(est.ci_high) << ','
            << grid.n_snapshots << '\n';
        ++n_rows;
    };

    for (std::size_t gi = 0; gi < n_group; ++gi) {
        for (std::size_t si = 0; si < n_sweep; ++si) {
            const std::size_t og = (group_set && !group_is_alpha) ? gi : 0;
            const std::size_t os = (!sweep_is_alpha && !sweep_is_b) ? si : 0;
            const PbGrid& grid = grids.at({og, os});
            const std::size_t alpha_idx = sweep_is_alpha ? si : group_is_alpha ? gi : 0;
            if (sweep_is_b) {
                emit_row(gi, si, grid, alpha_idx, si);
            } else {
                for (std::size_t bi = 0; bi < b_axis.size(); ++bi) {
                    emit_row(gi, si, grid, alpha_idx, bi);
                }
            }
        }
    }
    out.close();

    write_meta(spec.output_path, "simulate", spec, spec.base, overrides.workers, n_rows);

    RunSummary summary;
    summary.csv_path = spec.output_path;
    summary.meta_path = spec.output_path + ".meta";
    summary.n_rows = n_rows;
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

RunSummary run_gain_solver(const ExperimentSpec& spec_in, const RunOverrides& overrides) {
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentSpec spec = spec_in;
    if (overrides.seed) spec.base.seed = *overrides.seed;
    if (overrides.snapshots) spec.base.n_snapshots = *overrides.snapshots;
    if (overrides.out_path) spec.output_path = *overrides.out_path;
    spec.base.validate();

    if (!spec.gain_beta_db) {
        throw ConfigError("gain.beta_db is required (set it in the spec or pass --beta)");
    }
    if (!spec.gain_target_pb) {
        throw ConfigError("gain.target_pb is required (set it in the spec or pass --target)");
    }
    if (!spec.group_param.empty()) {
        throw ConfigError("group.param is not supported with the gain solver");
    }
    const bool sweep_is_b = spec.sweep_param == "b";
    if (!sweep_is_b && spec.sweep_param != "h_ut") {
        throw ConfigError("sweep.param must be 'b' or 'h_ut' for the gain solver (got '" +
                          spec.sweep_param + "')");
    }
    std::vector<int> b_for_value;
    if (sweep_is_b) {
        b_for_value = to_b_list(spec.sweep_values, "sweep.values");
    } else {
        if (spec.b_values.size() != 1) {
            throw ConfigError("b.list must contain exactly one value when sweep.param != b");
        }
        b_for_value.assign(spec.sweep_values.size(), spec.b_values[0]);
    }

    std::ofstream out = open_output(spec.output_path);
    out << "h_ut_m,B,beta_db,target_pb,alpha_star_db,gamma_db\n";

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::size_t n_rows = 0;
    for (std::size_t i = 0; i < spec.sweep_values.size(); ++i) {
        SimConfig cfg = spec.base;
        if (!sweep_is_b) apply_axis(cfg, spec.sweep_param, spec.sweep_values[i]);
        const int b = b_for_value[i];
        const GainResult res = required_processing_gain(cfg, *spec.gain_beta_db,
                                                        *spec.gain_target_pb, b,
                                                        overrides.workers);
        out << format_double(cfg.h_ut_m) << ',' << b << ',' << format_double(*spec.gain_beta_db)
            << ',' << format_double(*spec.gain_target_pb) << ','
            << format_double(res.found ? res.alpha_star_db : nan) << ','
            << format_double(res.found ? res.gamma_db : nan) << '\n';
        ++n_rows;
    }
    out.close();

    write_meta(spec.output_path, "gain", spec, spec.base, overrides.workers, n_rows);

    RunSummary summary;
    summary.csv_path = spec.output_path;
    summary.meta_path = spec.output_path + ".meta";
    summary.n_rows = n_rows;
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

} // namespace uavloc
