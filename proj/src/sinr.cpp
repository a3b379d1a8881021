#include "uavloc/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "uavloc/errors.hpp"

namespace uavloc {

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0)) {
        throw ConfigError("radio.bandwidth_hz must be > 0 (got " + std::to_string(bandwidth_hz) + ")");
    }
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double RadioParams::noise_power_dbm() const {
    return uavloc::noise_power_dbm(bandwidth_hz, noise_figure_db);
}

void draw_activity(int b, int t, double p, double q, RngStream& rng, ActivityDraw& out) {
    if (b < 1 || b > t) {
        throw ConfigError("B must satisfy 1 <= B <= T (got B=" + std::to_string(b) +
                          ", T=" + std::to_string(t) + ")");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("activity.p must be in [0, 1]");
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("activity.q must be in [0, 1]");

    out.participating.resize(static_cast<std::size_t>(b));
    out.others.resize(static_cast<std::size_t>(t - b));
    for (auto& r : out.participating) r = rng.uniform() < p ? 1 : 0;
    for (auto& s : out.others) s = rng.uniform() < q ? 1 : 0;
}

ActivityDraw draw_activity(int b, int t, double p, double q, RngStream& rng) {
    ActivityDraw out;
    draw_activity(b, t, p, q, rng, out);
    return out;
}

RankedSnapshot rank_by_mean_power(std::vector<LinkState> links, const RadioParams& radio) {
    if (links.empty()) throw ConfigError("rank_by_mean_power: link list is empty");

    RankedSnapshot snap;
    snap.order.resize(links.size());
    std::iota(snap.order.begin(), snap.order.end(), 0);
    std::sort(snap.order.begin(), snap.order.end(), [&](int a, int b) {
        const double ka = radio.tx_power_dbm - links[a].path_loss_db;
        const double kb = radio.tx_power_dbm - links[b].path_loss_db;
        if (ka != kb) return ka > kb;
        return a < b;
    });
    snap.rx_mw.reserve(links.size());
    for (int idx : snap.order) {
        const LinkState& l = links[idx];
        snap.rx_mw.push_back(dbm_to_mw(radio.tx_power_dbm - l.path_loss_db + l.shadowing_db));
    }
    snap.links = std::move(links);
    return snap;
}

double sinr_for_target(int target_rank, int b, const RankedSnapshot& snapshot,
                       const ActivityDraw& activity, double noise_mw) {
    const int t = static_cast<int>(snapshot.rx_mw.size());
    if (b < 1 || b > t || target_rank < 1 || target_rank > b) {
        throw std::out_of_range("sinr_for_target: need 1 <= target_rank <= B <= T");
    }

    double interference_mw = 0.0;
    for (int k = 1; k <= b; ++k) {
        if (k == target_rank) continue; // the target's own slot never self-interferes
        if (activity.participating[static_cast<std::size_t>(k - 1)]) {
            interference_mw += snapshot.rx_mw[static_cast<std::size_t>(k - 1)];
        }
    }
    if (b < t) {
        for (int j = b + 1; j <= t; ++j) {
            if (activity.others[static_cast<std::size_t>(j - b - 1)]) {
                interference_mw += snapshot.rx_mw[static_cast<std::size_t>(j - 1)];
            }
        }
    }
    const double signal_mw = snapshot.rx_mw[static_cast<std::size_t>(target_rank - 1)];
    return signal_mw / (interference_mw + noise_mw);
}

double sinr_for_target(int target_rank, int b, const RankedSnapshot& snapshot,
                       const ActivityDraw& activity, const RadioParams& radio) {
    return sinr_for_target(target_rank, b, snapshot, activity, radio.noise_power_mw());
}

} // namespace uavloc
