#include "uavloc/localizability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "uavloc/errors.hpp"

namespace uavloc {

namespace {

constexpr double wilson_z = 1.959963984540054; // 97.5% normal quantile

int resolve_workers(int workers, long long n_snapshots) {
    if (workers <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }
    if (static_cast<long long>(workers) > n_snapshots) {
        workers = static_cast<int>(n_snapshots);
    }
    return std::max(workers, 1);
}

} // namespace

int SimConfig::site_count() const {
    int count = 1;
    for (int t = 1; t <= tiers; ++t) count += 6 * t;
    return count;
}

void SimConfig::validate() const {
    if (!(isd_m > 0.0)) throw ConfigError("layout.isd_m must be > 0");
    if (tiers < 0 || tiers > 2) throw ConfigError("layout.tiers must be 0, 1 or 2");
    if (!(bs_height_m > 0.0)) throw ConfigError("layout.h_bs_m must be > 0");
    if (!(channel.fc_ghz > 0.0)) throw ConfigError("channel.fc_ghz must be > 0");
    if (channel.los_shadow_a_db < 0.0) throw ConfigError("channel.los_shadow_a_db must be >= 0");
    if (channel.nlos_shadow_std_db < 0.0) throw ConfigError("channel.nlos_shadow_std_db must be >= 0");
    if (!(radio.bandwidth_hz > 0.0)) throw ConfigError("radio.bandwidth_hz must be > 0");
    if (!(h_ut_m > 0.0)) throw ConfigError("uav.h_ut_m must be > 0");
    if (!std::isfinite(alpha_db)) throw ConfigError("sinr.alpha_db must be finite");
    if (!std::isfinite(beta_db)) throw ConfigError("sinr.beta_db must be finite");
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("activity.p must be in [0, 1]");
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("activity.q must be in [0, 1]");
    if (b_max != 0 && (b_max < 1 || b_max > site_count())) {
        throw ConfigError("b_max must be in [1, T] with T = " + std::to_string(site_count()));
    }
    if (n_snapshots < 1) throw ConfigError("mc.snapshots must be >= 1");
}

RankedSnapshot make_snapshot(const NetworkLayout& layout, const SimConfig& cfg, RngStream& rng) {
    const UavPosition uav = sample_uav_position(layout, cfg.h_ut_m, rng);
    const std::vector<LinkDistance> dists = link_distances(layout, uav);
    std::vector<LinkState> links;
    links.reserve(dists.size());
    for (const LinkDistance& d : dists) {
        links.push_back(sample_link(d.d2d_m, d.d3d_m, cfg.h_ut_m, cfg.channel, rng));
    }
    return rank_by_mean_power(std::move(links), cfg.radio);
}

std::vector<double> min_sinr_per_candidate(const RankedSnapshot& snapshot, double p, double q,
                                           const RadioParams& radio, RngStream& rng) {
    const int t = static_cast<int>(snapshot.rx_mw.size());
    const double noise_mw = radio.noise_power_mw();
    std::vector<double> out(static_cast<std::size_t>(t));
    ActivityDraw activity; // reused across draws
    for (int b = 1; b <= t; ++b) {
        double lowest = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= b; ++i) {
            draw_activity(b, t, p, q, rng, activity);
            lowest = std::min(lowest, sinr_for_target(i, b, snapshot, activity, noise_mw));
        }
        out[static_cast<std::size_t>(b - 1)] = lowest;
    }
    return out;
}

int psi(const RankedSnapshot& snapshot, double alpha_db, double p, double q,
        const RadioParams& radio, RngStream& rng) {
    const std::vector<double> lows = min_sinr_per_candidate(snapshot, p, q, radio, rng);
    const double alpha_lin = db_to_linear(alpha_db);
    for (int b = static_cast<int>(lows.size()); b >= 1; --b) {
        if (lows[static_cast<std::size_t>(b - 1)] >= alpha_lin) return b;
    }
    return 0;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t n) {
    if (n == 0) return {0.0, 1.0};
    const double z = wilson_z;
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double denom = 1.0 + z * z / nn;
    const double centre = (phat + z * z / (2.0 * nn)) / denom;
    const double hw = z * std::sqrt(phat * (1.0 - phat) / nn + z * z / (4.0 * nn * nn)) / denom;
    // the interval endpoints are exactly 0/1 in the degenerate cases
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - hw);
    const double hi = successes == n ? 1.0 : std::min(1.0, centre + hw);
    return {lo, hi};
}

PbGrid estimate_pb_grid(const SimConfig& cfg, std::span<const double> alphas_db,
                        std::span<const int> b_values, int workers) {
    cfg.validate();
    if (alphas_db.empty()) throw ConfigError("estimate_pb_grid: alpha list is empty");
    if (b_values.empty()) throw ConfigError("estimate_pb_grid: B list is empty");

    const NetworkLayout layout = build_hex_layout(cfg.isd_m, cfg.tiers, cfg.bs_height_m);
    const int t = static_cast<int>(layout.site_count());
    const int b_cap = std::min(t, cfg.b_limit());
    for (int b : b_values) {
        if (b < 1 || b > b_cap) {
            throw ConfigError("b.list entries must be in [1, " + std::to_string(b_cap) +
                              "] (got " + std::to_string(b) + ")");
        }
    }

    std::vector<double> alpha_lin(alphas_db.size());
    for (std::size_t a = 0; a < alphas_db.size(); ++a) {
        if (!std::isfinite(alphas_db[a])) throw ConfigError("sweep alpha values must be finite");
        alpha_lin[a] = db_to_linear(alphas_db[a]);
    }

    const long long n = cfg.n_snapshots;
    const int nworkers = resolve_workers(workers, n);
    const std::size_t na = alphas_db.size();

    // Per-worker histogram of psi per alpha; merged by summation, so the
    // result is independent of the partition.
    std::vector<std::vector<std::uint64_t>> hists(
        static_cast<std::size_t>(nworkers),
        std::vector<std::uint64_t>(na * static_cast<std::size_t>(t + 1), 0));

    auto run_range = [&](int w, long long begin, long long end) {
        std::vector<std::uint64_t>& hist = hists[static_cast<std::size_t>(w)];
        for (long long s = begin; s < end; ++s) {
            RngStream rng = RngStream::for_snapshot(cfg.seed, static_cast<std::uint64_t>(s));
            const RankedSnapshot snap = make_snapshot(layout, cfg, rng);
            const std::vector<double> lows =
                min_sinr_per_candidate(snap, cfg.p, cfg.q, cfg.radio, rng);
            for (std::size_t a = 0; a < na; ++a) {
                int psi_val = 0;
                for (int b = t; b >= 1; --b) {
                    if (lows[static_cast<std::size_t>(b - 1)] >= alpha_lin[a]) {
                        psi_val = b;
                        break;
                    }
                }
                ++hist[a * static_cast<std::size_t>(t + 1) + static_cast<std::size_t>(psi_val)];
            }
        }
    };

    if (nworkers == 1) {
        run_range(0, 0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        const long long base = n / nworkers;
        const long long rem = n % nworkers;
        long long begin = 0;
        for (int w = 0; w < nworkers; ++w) {
            const long long len = base + (w < rem ? 1 : 0);
            pool.emplace_back(run_range, w, begin, begin + len);
            begin += len;
        }
        for (std::thread& th : pool) th.join();
    }

    PbGrid grid;
    grid.alphas_db.assign(alphas_db.begin(), alphas_db.end());
    grid.b_values.assign(b_values.begin(), b_values.end());
    grid.n_snapshots = n;
    grid.seed = cfg.seed;
    grid.at.resize(na);
    for (std::size_t a = 0; a < na; ++a) {
        // survival counts over the merged histogram: successes(B) = #{psi >= B}
        std::vector<std::uint64_t> tail(static_cast<std::size_t>(t + 2), 0);
        for (int v = t; v >= 0; --v) {
            std::uint64_t total = tail[static_cast<std::size_t>(v + 1)];
            for (const auto& hist : hists) {
                total += hist[a * static_cast<std::size_t>(t + 1) + static_cast<std::size_t>(v)];
            }
            tail[static_cast<std::size_t>(v)] = total;
        }
        grid.at[a].reserve(b_values.size());
        for (int b : b_values) {
            PbEstimate est;
            est.successes = tail[static_cast<std::size_t>(b)];
            est.pb = static_cast<double>(est.successes) / static_cast<double>(n);
            const auto [lo, hi] = wilson_interval(est.successes, static_cast<std::uint64_t>(n));
            est.ci_low = lo;
            est.ci_high = hi;
            grid.at[a].push_back(est);
        }
    }
    return grid;
}

std::vector<PbEstimate> estimate_pb(const SimConfig& cfg, std::span<const int> b_values,
                                    int workers) {
    const double alpha[1] = {cfg.alpha_db};
    return estimate_pb_grid(cfg, alpha, b_values, workers).at[0];
}

GainResult required_processing_gain(const SimConfig& cfg, double beta_db, double target_pb,
                                    int b, int workers) {
    if (!(target_pb > 0.0 && target_pb < 1.0)) {
        throw ConfigError("gain.target_pb must be in (0, 1)");
    }
    if (!std::isfinite(beta_db)) throw ConfigError("gain.beta_db must be finite");

    const int bs[1] = {b};
    auto pb_at = [&](double alpha_db) {
        SimConfig probe = cfg;
        probe.alpha_db = alpha_db; // same seed every evaluation: common random numbers
        return estimate_pb(probe, bs, workers)[0].pb;
    };

    constexpr double alpha_lo = -60.0;
    constexpr double alpha_hi = 0.0;
    constexpr double tol_db = 0.1;

    GainResult result;
    result.pb_low = pb_at(alpha_lo);
    result.pb_high = pb_at(alpha_hi);
    if (result.pb_low < target_pb || result.pb_high >= target_pb) {
        result.found = false; // crossing not bracketed by the search range
        return result;
    }

    double lo = alpha_lo, hi = alpha_hi;
    while (hi - lo > tol_db) {
        const double mid = 0.5 * (lo + hi);
        if (pb_at(mid) >= target_pb) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    result.found = true;
    result.alpha_star_db = 0.5 * (lo + hi);
    result.gamma_db = beta_db - result.alpha_star_db;
    return result;
}

} // namespace uavloc
