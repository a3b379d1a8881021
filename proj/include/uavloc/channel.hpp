#pragma once

#include "uavloc/rng.hpp"

namespace uavloc {

/// UMa-AV channel constants (3GPP TR 36.777). The LOS shadow-fading standard
/// deviation decays with altitude as a_db * exp(-b_per_m * h_ut); the NLOS
/// one is constant.
struct ChannelParams {
    double fc_ghz = 2.0;
    double los_shadow_a_db = 4.64;
    double los_shadow_b_per_m = 0.0066;
    double nlos_shadow_std_db = 6.0;
};

/// LOS probability for a UAV at altitude h_ut_m whose ground-plane distance
/// to the BS is d2d_m. Equals 1 up to a break distance that grows with
/// altitude, then decays towards d1/d2d. Result is in [0, 1].
double los_probability(double d2d_m, double h_ut_m);

/// LOS path loss in dB: 28 + 22 log10(d3d) + 20 log10(fc). d3d_m >= 1.
double path_loss_los_db(double d3d_m, double fc_ghz);

/// NLOS path loss in dB with an altitude-dependent distance exponent:
/// -17.5 + (46 - 7 log10(h_ut)) log10(d3d) + 20 log10(40 pi fc / 3).
double path_loss_nlos_db(double d3d_m, double h_ut_m, double fc_ghz);

/// Shadow-fading standard deviation in dB for the given link condition.
double shadowing_std_db(double h_ut_m, bool los, const ChannelParams& params = {});

/// One realized UAV-BS link.
struct LinkState {
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    bool los = false;
    double path_loss_db = 0.0;
    double shadowing_db = 0.0; // zero-mean Gaussian in dB
};

/// Draw a link: Bernoulli LOS state, matching path loss, and a shadowing
/// realization with the altitude-dependent std. Consumes exactly one uniform
/// and one normal (two uniforms) from the stream.
LinkState sample_link(double d2d_m, double d3d_m, double h_ut_m, const ChannelParams& params,
                      RngStream& rng);

} // namespace uavloc
