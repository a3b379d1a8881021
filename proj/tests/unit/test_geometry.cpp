#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "uavloc/errors.hpp"
#include "uavloc/geometry.hpp"

using namespace uavloc;

namespace {
constexpr double pi = 3.14159265358979323846;

double dist_from_origin(const Site& s) { return std::hypot(s.x_m, s.y_m); }
} // namespace

TEST_CASE("hex layout site counts and ring distances") {
    const NetworkLayout two = build_hex_layout(500.0, 2, 25.0);
    REQUIRE(two.site_count() == 19);
    CHECK(two.sites[0].x_m == 0.0);
    CHECK(two.sites[0].y_m == 0.0);

    int at_isd = 0, at_sqrt3 = 0, at_2isd = 0;
    for (std::size_t i = 1; i < two.sites.size(); ++i) {
        const double d = dist_from_origin(two.sites[i]);
        if (std::fabs(d - 500.0) < 1e-9) ++at_isd;
        if (std::fabs(d - 866.0254037844386) < 1e-9) ++at_sqrt3;
        if (std::fabs(d - 1000.0) < 1e-9) ++at_2isd;
        CHECK(two.sites[i].height_m == 25.0);
    }
    CHECK(at_isd == 6);
    CHECK(at_sqrt3 == 6);
    CHECK(at_2isd == 6);

    // nearest non-centre site at one ISD, farthest at two
    double nearest = 1e9, farthest = 0.0;
    for (std::size_t i = 1; i < two.sites.size(); ++i) {
        nearest = std::min(nearest, dist_from_origin(two.sites[i]));
        farthest = std::max(farthest, dist_from_origin(two.sites[i]));
    }
    CHECK(nearest == doctest::Approx(500.0).epsilon(1e-12));
    CHECK(farthest == doctest::Approx(1000.0).epsilon(1e-12));

    CHECK(build_hex_layout(500.0, 0, 25.0).site_count() == 1);
    CHECK(build_hex_layout(500.0, 1, 25.0).site_count() == 7);
}

TEST_CASE("hex layout ordering is by ring then angle, deterministically") {
    const NetworkLayout a = build_hex_layout(500.0, 2, 25.0);
    const NetworkLayout b = build_hex_layout(500.0, 2, 25.0);
    for (std::size_t i = 0; i < a.sites.size(); ++i) {
        CHECK(a.sites[i].x_m == b.sites[i].x_m);
        CHECK(a.sites[i].y_m == b.sites[i].y_m);
    }
    // first ring at 0, 60, ..., 300 degrees
    for (int k = 0; k < 6; ++k) {
        const Site& s = a.sites[static_cast<std::size_t>(1 + k)];
        double angle = std::atan2(s.y_m, s.x_m) * 180.0 / pi;
        if (angle < -1e-9) angle += 360.0;
        CHECK(angle == doctest::Approx(60.0 * k).epsilon(1e-9));
    }
    // second ring angles ascend from 0 in 30 degree steps
    for (int k = 0; k < 12; ++k) {
        const Site& s = a.sites[static_cast<std::size_t>(7 + k)];
        double angle = std::atan2(s.y_m, s.x_m) * 180.0 / pi;
        if (angle < -1e-9) angle += 360.0;
        CHECK(angle == doctest::Approx(30.0 * k).epsilon(1e-9));
    }
}

TEST_CASE("hex layout input validation") {
    CHECK_THROWS_AS(build_hex_layout(0.0, 2, 25.0), ConfigError);
    CHECK_THROWS_AS(build_hex_layout(-10.0, 2, 25.0), ConfigError);
    CHECK_THROWS_AS(build_hex_layout(500.0, 3, 25.0), ConfigError);
    CHECK_THROWS_AS(build_hex_layout(500.0, -1, 25.0), ConfigError);
}

TEST_CASE("uav sampling is uniform over the central cell") {
    const NetworkLayout layout = build_hex_layout(500.0, 2, 25.0);
    RngStream rng(2024);

    const int n = 100000;
    double sum_x = 0.0, sum_y = 0.0;
    int in_circle = 0;
    int sector_counts[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const UavPosition pos = sample_uav_position(layout, 60.0, rng);
        REQUIRE(inside_central_cell(layout, pos.x_m, pos.y_m));
        sum_x += pos.x_m;
        sum_y += pos.y_m;
        if (std::hypot(pos.x_m, pos.y_m) <= 250.0) ++in_circle;
        double angle = std::atan2(pos.y_m, pos.x_m);
        if (angle < 0) angle += 2.0 * pi;
        int sector = static_cast<int>(angle / (pi / 3.0));
        sector_counts[std::min(sector, 5)]++;
    }
    CHECK(std::fabs(sum_x / n) < 5.0);
    CHECK(std::fabs(sum_y / n) < 5.0);

    // area of the inscribed circle over the cell area: pi*sqrt(3)/6
    const double circle_fraction = static_cast<double>(in_circle) / n;
    CHECK(circle_fraction == doctest::Approx(0.9068996821171089).epsilon(0.006));

    // six-sector chi-square, 1% critical value for 5 dof
    const double expected = n / 6.0;
    double chi2 = 0.0;
    for (int c : sector_counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(chi2 < 15.0863);
}

TEST_CASE("uav sampling reproduces under the same stream") {
    const NetworkLayout layout = build_hex_layout(500.0, 2, 25.0);
    RngStream a(7), b(7);
    for (int i = 0; i < 100; ++i) {
        const UavPosition pa = sample_uav_position(layout, 30.0, a);
        const UavPosition pb = sample_uav_position(layout, 30.0, b);
        CHECK(pa.x_m == pb.x_m);
        CHECK(pa.y_m == pb.y_m);
    }
    CHECK_THROWS_AS(sample_uav_position(layout, 0.0, a), ConfigError);
}

TEST_CASE("link distances") {
    const NetworkLayout layout = build_hex_layout(500.0, 2, 25.0);

    SUBCASE("vertical offset only at the centre") {
        const auto d = link_distances(layout, UavPosition{0.0, 0.0, 30.0});
        REQUIRE(d.size() == 19);
        CHECK(d[0].d2d_m == 0.0);
        CHECK(d[0].d3d_m == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("equal heights collapse d3d to d2d") {
        const auto d = link_distances(layout, UavPosition{0.0, 0.0, 25.0});
        for (const auto& ld : d) CHECK(ld.d3d_m == doctest::Approx(ld.d2d_m).epsilon(1e-12));
    }
    SUBCASE("first tier slant distance at 120 m altitude") {
        const auto d = link_distances(layout, UavPosition{0.0, 0.0, 120.0});
        CHECK(d[1].d2d_m == doctest::Approx(500.0).epsilon(1e-12));
        CHECK(d[1].d3d_m == doctest::Approx(508.94498720392168).epsilon(1e-12));
    }
    SUBCASE("d3d dominates d2d and the height gap") {
        RngStream rng(11);
        for (int i = 0; i < 200; ++i) {
            const UavPosition pos = sample_uav_position(layout, 30.0 + 90.0 * rng.uniform(), rng);
            for (const auto& ld : link_distances(layout, pos)) {
                CHECK(ld.d3d_m >= ld.d2d_m);
                CHECK(ld.d3d_m >= std::fabs(pos.height_m - 25.0) - 1e-12);
            }
        }
    }
}
