#pragma once

#include <cstdint>
#include <vector>

#include "uavloc/channel.hpp"
#include "uavloc/db.hpp"
#include "uavloc/rng.hpp"

namespace uavloc {

struct RadioParams {
    double tx_power_dbm = 46.0;
    double bandwidth_hz = 10e6;
    double noise_figure_db = 9.0;

    double noise_power_dbm() const;
    double noise_power_mw() const { return dbm_to_mw(noise_power_dbm()); }
};

/// Thermal noise over the signal bandwidth: -174 dBm/Hz + 10 log10(W) + NF.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

/// One activity realization. participating[k] is the transmit indicator of
/// the k-th ranked participating BS (Bernoulli p); others[j] covers the
/// T - B non-participating BSs in rank order (Bernoulli q).
struct ActivityDraw {
    std::vector<std::uint8_t> participating;
    std::vector<std::uint8_t> others;
};

/// Draw activity indicators for a candidate set of B participating BSs out
/// of T. Consumes exactly T uniforms; indicators are u < p (resp. u < q), so
/// runs sharing a stream are coupled monotonically across p and q.
ActivityDraw draw_activity(int b, int t, double p, double q, RngStream& rng);

/// Same, reusing the caller's buffers (hot path).
void draw_activity(int b, int t, double p, double q, RngStream& rng, ActivityDraw& out);

/// Links of one snapshot, ranked by mean received strength. `order[r]` is
/// the site index holding rank r; `rx_mw[r]` caches that link's realized
/// received power (tx - path loss + shadowing) in mW.
struct RankedSnapshot {
    std::vector<LinkState> links; // site order
    std::vector<int> order;       // rank -> site index
    std::vector<double> rx_mw;    // rank -> received power, shadowing included
};

/// Rank links by tx_power - path_loss descending (shadowing excluded from
/// the key; the realized LOS/NLOS state is part of the path loss). Ties
/// break towards the lower site index.
RankedSnapshot rank_by_mean_power(std::vector<LinkState> links, const RadioParams& radio);

/// SINR (linear) of the localization signal from the target_rank-th ranked
/// BS (1-based, <= b) when the b top-ranked BSs participate. Interference
/// splits into the other participating BSs gated by `participating` and the
/// non-participating ones gated by `others` (empty contribution when b = T).
double sinr_for_target(int target_rank, int b, const RankedSnapshot& snapshot,
                       const ActivityDraw& activity, const RadioParams& radio);

/// Variant taking the precomputed linear noise power (hot path).
double sinr_for_target(int target_rank, int b, const RankedSnapshot& snapshot,
                       const ActivityDraw& activity, double noise_mw);

} // namespace uavloc
