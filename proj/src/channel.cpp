#include "uavloc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uavloc {

namespace {

constexpr double pi = 3.14159265358979323846;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

} // namespace

double los_probability(double d2d_m, double h_ut_m) {
    require_finite(d2d_m, "d2d_m");
    require_finite(h_ut_m, "h_ut_m");
    if (d2d_m < 0.0) throw std::domain_error("d2d_m must be >= 0");
    if (!(h_ut_m > 0.0)) throw std::domain_error("h_ut_m must be > 0");

    const double d1 = std::max(460.0 * std::log10(h_ut_m) - 700.0, 18.0);
    if (d2d_m <= d1) return 1.0;
    const double p1 = 4300.0 * std::log10(h_ut_m) - 3800.0;
    const double ratio = d1 / d2d_m;
    const double prob = ratio + std::exp(-d2d_m / p1) * (1.0 - ratio);
    // The model is specified for UMa-AV altitudes; below ~7.65 m the decay
    // constant p1 turns non-positive and the raw expression leaves [0, 1].
    return std::clamp(prob, 0.0, 1.0);
}

double path_loss_los_db(double d3d_m, double fc_ghz) {
    if (!(d3d_m >= 1.0)) throw std::domain_error("d3d_m must be >= 1 m");
    if (!(fc_ghz > 0.0)) throw std::domain_error("fc_ghz must be > 0");
    return 28.0 + 22.0 * std::log10(d3d_m) + 20.0 * std::log10(fc_ghz);
}

double path_loss_nlos_db(double d3d_m, double h_ut_m, double fc_ghz) {
    if (!(d3d_m >= 1.0)) throw std::domain_error("d3d_m must be >= 1 m");
    if (!(h_ut_m > 1.0)) throw std::domain_error("h_ut_m must be > 1 m");
    if (!(fc_ghz > 0.0)) throw std::domain_error("fc_ghz must be > 0");
    return -17.5 + (46.0 - 7.0 * std::log10(h_ut_m)) * std::log10(d3d_m) +
           20.0 * std::log10(40.0 * pi * fc_ghz / 3.0);
}

double shadowing_std_db(double h_ut_m, bool los, const ChannelParams& params) {
    if (!(h_ut_m > 0.0)) throw std::domain_error("h_ut_m must be > 0");
    if (los) {
        return params.los_shadow_a_db * std::exp(-params.los_shadow_b_per_m * h_ut_m);
    }
    return params.nlos_shadow_std_db;
}

LinkState sample_link(double d2d_m, double d3d_m, double h_ut_m, const ChannelParams& params,
                      RngStream& rng) {
    LinkState link;
    link.d2d_m = d2d_m;
    link.d3d_m = d3d_m;
    link.los = rng.uniform() < los_probability(d2d_m, h_ut_m);
    link.path_loss_db = link.los ? path_loss_los_db(d3d_m, params.fc_ghz)
                                 : path_loss_nlos_db(d3d_m, h_ut_m, params.fc_ghz);
    link.shadowing_db = rng.normal() * shadowing_std_db(h_ut_m, link.los, params);
    return link;
}

} // namespace uavloc
