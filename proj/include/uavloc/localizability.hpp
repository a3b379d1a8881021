#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "uavloc/geometry.hpp"
#include "uavloc/sinr.hpp"

namespace uavloc {

/// Full experiment configuration. Defaults are the baseline urban-macro
/// setup: 19-site two-tier grid at 500 m ISD, 2 GHz / 10 MHz downlink,
/// 46 dBm per site, 9 dB UAV noise figure.
struct SimConfig {
    double isd_m = 500.0;
    int tiers = 2;
    double bs_height_m = 25.0;
    ChannelParams channel{};
    RadioParams radio{};
    double h_ut_m = 30.0;
    double alpha_db = -16.0; // pre-processing SINR threshold
    double beta_db = -6.0;   // post-processing SINR requirement
    double p = 1.0;          // participating-BS activity factor
    double q = 1.0;          // non-participating-BS activity factor
    int b_max = 0; // largest requestable B; 0 means the full site count
    long long n_snapshots = 100000;
    std::uint64_t seed = 20260810;

    int site_count() const; // T implied by tiers
    int b_limit() const { return b_max == 0 ? site_count() : b_max; }
    void validate() const;  // throws ConfigError
};

/// Draw one snapshot: UAV position uniform in the central cell, then one
/// link realization per site, ranked by mean received strength.
RankedSnapshot make_snapshot(const NetworkLayout& layout, const SimConfig& cfg, RngStream& rng);

/// min over targets i = 1..B of SINR_i(B), in linear scale, for every
/// candidate B in 1..T. Index B-1 holds the value for B. Every (i, B) pair
/// gets a fresh activity draw, consumed in a fixed order (B outer ascending,
/// i inner ascending), so a snapshot's stream position after this call is
/// independent of thresholds applied later.
std::vector<double> min_sinr_per_candidate(const RankedSnapshot& snapshot, double p, double q,
                                           const RadioParams& radio, RngStream& rng);

/// Largest candidate count B whose B top-ranked signals all clear the
/// pre-processing threshold, or 0 if none does. Not assumed monotone in B:
/// every B in 1..T is evaluated.
int psi(const RankedSnapshot& snapshot, double alpha_db, double p, double q,
        const RadioParams& radio, RngStream& rng);

struct PbEstimate {
    double pb = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t successes = 0;

    double half_width() const { return 0.5 * (ci_high - ci_low); }
};

/// 95% Wilson score interval for `successes` out of `n` trials.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t n);

/// P_B estimates over an (alpha, B) grid from one set of snapshots.
struct PbGrid {
    std::vector<double> alphas_db;
    std::vector<int> b_values;
    std::vector<std::vector<PbEstimate>> at; // [alpha index][b index]
    long long n_snapshots = 0;
    std::uint64_t seed = 0;

    const PbEstimate& cell(std::size_t alpha_idx, std::size_t b_idx) const {
        return at[alpha_idx][b_idx];
    }
};

/// Monte Carlo estimate of P_B = Pr(psi >= B) for every alpha in `alphas_db`
/// and every B in `b_values`, sharing the snapshot set across the whole grid
/// (common random numbers). Results depend only on (cfg, cfg.seed), never on
/// the worker count; workers <= 0 selects the hardware concurrency.
PbGrid estimate_pb_grid(const SimConfig& cfg, std::span<const double> alphas_db,
                        std::span<const int> b_values, int workers = 1);

/// Single-threshold convenience wrapper around estimate_pb_grid using
/// cfg.alpha_db; one estimate per entry of b_values.
std::vector<PbEstimate> estimate_pb(const SimConfig& cfg, std::span<const int> b_values,
                                    int workers = 1);

struct GainResult {
    bool found = false;
    double alpha_star_db = 0.0; // threshold at which P_B crosses the target
    double gamma_db = 0.0;      // required processing gain beta - alpha*
    double pb_low = 0.0;        // P_B at the low end of the search range
    double pb_high = 0.0;       // P_B at the high end of the search range
};

/// Solve for the processing gain needed to hit `target_pb`: bisect the
/// threshold alpha over [-60, 0] dB (0.1 dB tolerance) with common random
/// numbers across evaluations, each evaluation spending cfg.n_snapshots
/// snapshots, and return gamma = beta - alpha*. If the target is not
/// bracketed on the range, `found` is false and no gamma is reported.
GainResult required_processing_gain(const SimConfig& cfg, double beta_db, double target_pb,
                                    int b, int workers = 1);

} // namespace uavloc
