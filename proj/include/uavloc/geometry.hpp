#pragma once

#include <cstddef>
#include <vector>

#include "uavloc/rng.hpp"

namespace uavloc {

struct Site {
    double x_m = 0.0;
    double y_m = 0.0;
    double height_m = 0.0;
};

/// Immutable hexagonal deployment: one centre site plus full rings of
/// neighbours. Sites are ordered by ring, then by angle from the positive
/// x axis, so indexing is deterministic for a given (isd, tiers).
struct NetworkLayout {
    std::vector<Site> sites;
    double isd_m = 0.0;
    int tiers = 0;

    std::size_t site_count() const { return sites.size(); }
};

/// Build a layout with `tiers` full rings around the centre site
/// (1, 7 or 19 sites for tiers 0, 1, 2). First-ring neighbours sit at
/// angles 0, 60, ..., 300 degrees at distance isd from the origin.
NetworkLayout build_hex_layout(double isd_m, int tiers, double bs_height_m);

struct UavPosition {
    double x_m = 0.0;
    double y_m = 0.0;
    double height_m = 0.0;
};

/// Central cell membership test. The cell is the hexagon around site 0 with
/// flat-to-flat width equal to the inter-site distance (circumradius
/// isd/sqrt(3)), i.e. the Voronoi cell of the centre site.
bool inside_central_cell(const NetworkLayout& layout, double x_m, double y_m);

/// Uniform position over the central cell at altitude h_ut_m, via rejection
/// sampling from the cell's bounding rectangle.
UavPosition sample_uav_position(const NetworkLayout& layout, double h_ut_m, RngStream& rng);

struct LinkDistance {
    double d2d_m = 0.0;
    double d3d_m = 0.0;
};

/// Ground-plane and slant distances to every site, in site order.
/// d3d >= d2d always, with equality iff the UAV is at BS height.
std::vector<LinkDistance> link_distances(const NetworkLayout& layout, const UavPosition& uav);

} // namespace uavloc
