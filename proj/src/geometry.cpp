#include "uavloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "uavloc/errors.hpp"

namespace uavloc {

namespace {

constexpr double pi = 3.14159265358979323846;

// Hex ring index of axial coordinates (i, j) on the triangular lattice.
int ring_of(int i, int j) {
    return (std::abs(i) + std::abs(j) + std::abs(i + j)) / 2;
}

} // namespace

NetworkLayout build_hex_layout(double isd_m, int tiers, double bs_height_m) {
    if (!(isd_m > 0.0)) {
        throw ConfigError("layout.isd_m must be > 0 (got " + std::to_string(isd_m) + ")");
    }
    if (tiers < 0 || tiers > 2) {
        throw ConfigError("layout.tiers must be 0, 1 or 2 (got " + std::to_string(tiers) + ")");
    }

    // Lattice basis with first-ring neighbours at 0 and 60 degrees.
    const double a1x = isd_m, a1y = 0.0;
    const double a2x = 0.5 * isd_m, a2y = 0.5 * std::sqrt(3.0) * isd_m;

    struct Raw {
        int ring;
        double angle;
        double x, y;
    };
    std::vector<Raw> raw;
    for (int i = -tiers; i <= tiers; ++i) {
        for (int j = -tiers; j <= tiers; ++j) {
            const int r = ring_of(i, j);
            if (r > tiers) continue;
            const double x = i * a1x + j * a2x;
            const double y = i * a1y + j * a2y;
            double angle = (r == 0) ? 0.0 : std::atan2(y, x);
            if (angle < -1e-12) angle += 2.0 * pi;
            raw.push_back({r, angle, x, y});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return std::tie(a.ring, a.angle) < std::tie(b.ring, b.angle);
    });

    NetworkLayout layout;
    layout.isd_m = isd_m;
    layout.tiers = tiers;
    layout.sites.reserve(raw.size());
    for (const Raw& r : raw) {
        layout.sites.push_back({r.x, r.y, bs_height_m});
    }
    return layout;
}

bool inside_central_cell(const NetworkLayout& layout, double x_m, double y_m) {
    // Half of the flat-to-flat width; the cell is bounded by the
    // perpendicular bisectors towards the six first-ring directions.
    const double apothem = 0.5 * layout.isd_m;
    const double c60 = 0.5, s60 = 0.5 * std::sqrt(3.0);
    const double p0 = std::fabs(x_m);
    const double p1 = std::fabs(c60 * x_m + s60 * y_m);
    const double p2 = std::fabs(-c60 * x_m + s60 * y_m);
    return p0 <= apothem && p1 <= apothem && p2 <= apothem;
}

UavPosition sample_uav_position(const NetworkLayout& layout, double h_ut_m, RngStream& rng) {
    if (!(h_ut_m > 0.0)) {
        throw ConfigError("uav.h_ut_m must be > 0 (got " + std::to_string(h_ut_m) + ")");
    }
    // Bounding rectangle of the cell: |x| <= isd/2 (flats), |y| <= isd/sqrt(3)
    // (vertices at 90/270 degrees).
    const double half_w = 0.5 * layout.isd_m;
    const double half_h = layout.isd_m / std::sqrt(3.0);
    for (;;) {
        const double x = (2.0 * rng.uniform() - 1.0) * half_w;
        const double y = (2.0 * rng.uniform() - 1.0) * half_h;
        if (inside_central_cell(layout, x, y)) {
            return UavPosition{x, y, h_ut_m};
        }
    }
}

std::vector<LinkDistance> link_distances(const NetworkLayout& layout, const UavPosition& uav) {
    std::vector<LinkDistance> out;
    out.reserve(layout.sites.size());
    for (const Site& site : layout.sites) {
        const double dx = uav.x_m - site.x_m;
        const double dy = uav.y_m - site.y_m;
        const double dz = uav.height_m - site.height_m;
        const double d2d = std::hypot(dx, dy);
        out.push_back({d2d, std::sqrt(d2d * d2d + dz * dz)});
    }
    return out;
}

} // namespace uavloc
