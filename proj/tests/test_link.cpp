#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ris/link.hpp"
#include "ris/synthesis.hpp"

using namespace ris;

namespace {
constexpr double deg = pi / 180.0;
}

TEST_CASE("radar ratio matches the hand-evaluated ideal-horn example") {
    RadarLinkParams p;
    p.directivity_tx = 100.0;
    p.directivity_rx = 100.0;
    p.wavelength_m = 1.0902e-2;
    p.r1_m = 0.8;
    p.r2_m = 0.8;
    p.sigma_m2 = 0.516;

    const double ratio = radar_received_ratio(p);
    CHECK(ratio == doctest::Approx(7.54e-4).epsilon(2e-3));
    CHECK(radar_received_ratio_db(p) == doctest::Approx(-31.2).epsilon(3e-3));
}

TEST_CASE("radar ratio scaling structure") {
    RadarLinkParams p;
    p.directivity_tx = 100.0;
    p.directivity_rx = 50.0;
    p.wavelength_m = 1.2e-2;
    p.r1_m = 0.5;
    p.r2_m = 0.9;
    p.sigma_m2 = 0.2;
    const double base = radar_received_ratio(p);

    // Linear in sigma and in each efficiency.
    RadarLinkParams q = p;
    q.sigma_m2 *= 3.0;
    CHECK(radar_received_ratio(q) == doctest::Approx(3.0 * base).epsilon(1e-12));
    q = p;
    q.efficiency_tx = 0.5;
    CHECK(radar_received_ratio(q) == doctest::Approx(0.5 * base).epsilon(1e-12));

    // Quadratic decay in each distance.
    q = p;
    q.r1_m *= 2.0;
    CHECK(radar_received_ratio(q) == doctest::Approx(base / 4.0).epsilon(1e-12));
    q = p;
    q.r2_m *= 3.0;
    CHECK(radar_received_ratio(q) == doctest::Approx(base / 9.0).epsilon(1e-12));

    // Hard zeros.
    q = p;
    q.sigma_m2 = 0.0;
    CHECK(radar_received_ratio(q) == 0.0);
    CHECK(radar_received_ratio_db(q) == -std::numeric_limits<double>::infinity());
    q = p;
    q.polarization_match = 0.0;
    CHECK(radar_received_ratio(q) == 0.0);
}

TEST_CASE("link parameter validation") {
    RadarLinkParams p;
    p.directivity_tx = 100.0;
    p.directivity_rx = 100.0;
    p.wavelength_m = 1e-2;
    p.r1_m = 0.8;
    p.r2_m = 0.8;
    p.sigma_m2 = 0.5;
    CHECK_NOTHROW(radar_received_ratio(p));

    RadarLinkParams q = p;
    q.efficiency_tx = 1.5;
    CHECK_THROWS_AS(radar_received_ratio(q), ConfigError);
    q = p;
    q.mismatch_rx = 1.0;
    CHECK_THROWS_AS(radar_received_ratio(q), ConfigError);
    q = p;
    q.r1_m = 0.0;
    CHECK_THROWS_AS(radar_received_ratio(q), ConfigError);
    q = p;
    q.sigma_m2 = -1.0;
    CHECK_THROWS_AS(radar_received_ratio(q), ConfigError);
}

TEST_CASE("far-field distance uses the aperture diagonal") {
    const ArrayLayout big = make_layout(20, 20, 2.35e-3, 2.35e-3);
    const double d_big = far_field_distance(big, 27.5e9);
    const double diag = std::sqrt(2.0) * 0.047;
    CHECK(d_big == doctest::Approx(2.0 * diag * diag / wavelength(27.5e9))
                       .epsilon(1e-12));
    CHECK(d_big == doctest::Approx(0.811).epsilon(2e-3));

    const ArrayLayout small = make_layout(10, 10, 2.4e-3, 2.4e-3);
    CHECK(far_field_distance(small, 27.5e9) == doctest::Approx(0.211).epsilon(2e-3));

    // Doubling the wavelength halves the distance exactly.
    CHECK(far_field_distance(big, 13.75e9) == doctest::Approx(d_big / 2.0).epsilon(1e-12));
}

TEST_CASE("far-field enhancement is a pure cross-section ratio") {
    const ArrayLayout layout = make_layout(10, 10, 2.35e-3, 2.35e-3);
    const UnitCellResponse resp = default_response();
    const double f = 23.5e9;

    PatternMask all_off;
    all_off.column_states.assign(10, 0);
    CHECK(enhancement_far(layout, all_off, resp, 30.0, f) == doctest::Approx(0.0));

    // Optimized mask for the same geometry beats the reference.
    const Vec3 inc{std::sin(30.0 * deg), 0.0, std::cos(30.0 * deg)};
    const Scene scene =
        make_scene(Terminal::direction(inc), Terminal::direction({0.0, 0.0, 1.0}), f);
    const ColumnContributions contrib = column_contributions(layout, resp, scene, f);
    const PatternMask mask = optimize_exhaustive(contrib);
    const double enh = enhancement_far(layout, mask, resp, 30.0, f);
    CHECK(enh >= 0.0);

    // The same ratio comes out of the full radar equation no matter what
    // the horn/distance bookkeeping is set to: everything else cancels.
    const Vec3 obs{0.0, 0.0, 1.0};
    const double sigma_mask = rcs(layout, mask, resp, inc, obs, f);
    const double sigma_ref = rcs(layout, all_off, resp, inc, obs, f);
    for (double d : {10.0, 100.0}) {
        for (double r : {0.5, 2.0}) {
            RadarLinkParams p;
            p.directivity_tx = d;
            p.directivity_rx = d;
            p.wavelength_m = wavelength(f);
            p.r1_m = r;
            p.r2_m = 2.0 * r;
            p.efficiency_tx = 0.8;
            p.sigma_m2 = sigma_mask;
            RadarLinkParams p_ref = p;
            p_ref.sigma_m2 = sigma_ref;
            const double via_link = 10.0 * std::log10(radar_received_ratio(p) /
                                                      radar_received_ratio(p_ref));
            CHECK(via_link == doctest::Approx(enh).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(enhancement_far(layout, all_off, resp, 95.0, f), ConfigError);
}
