#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ris/synthesis.hpp"

using namespace ris;

namespace {

constexpr double deg = pi / 180.0;

Terminal feed_at(double angle_deg, double distance_m) {
    return Terminal::position({distance_m * std::sin(angle_deg * deg), 0.0,
                               distance_m * std::cos(angle_deg * deg)});
}

Vec3 dir_at(double angle_deg) {
    return Vec3{std::sin(angle_deg * deg), 0.0, std::cos(angle_deg * deg)};
}

/// Brute-force |sum| maximizer with the documented tie-break (first mask
/// in MSB-first integer order wins), used as the exhaustive-search oracle.
PatternMask brute_force(const ColumnContributions& contrib) {
    const std::size_t n = contrib.n_cols();
    std::uint32_t best_code = 0;
    double best = -1.0;
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const bool on = (code >> (n - 1 - j)) & 1u;
            sum += on ? contrib.c_on[j] : contrib.c_off[j];
        }
        if (std::norm(sum) > best) {
            best = std::norm(sum);
            best_code = code;
        }
    }
    PatternMask mask;
    mask.column_states.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        mask.column_states[j] = (best_code >> (n - 1 - j)) & 1u;
    return mask;
}

}  // namespace

TEST_CASE("phase wrapping lands in (-pi, pi]") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(pi) == doctest::Approx(pi));
    CHECK(wrap_phase(-pi) == doctest::Approx(pi));
    CHECK(wrap_phase(3.0 * pi / 2.0) == doctest::Approx(-pi / 2.0));
    CHECK(wrap_phase(2.0 * pi + 0.25) == doctest::Approx(0.25));
    CHECK(wrap_phase(-7.0 * pi) == doctest::Approx(pi));
}

TEST_CASE("boresight plane-wave feed gives a flat profile") {
    const ArrayLayout layout = make_layout(8, 8, 2.35e-3, 2.35e-3);
    const Terminal feed = Terminal::position({0.0, 0.0, 1.0e6});
    const std::vector<double> profile =
        phase_profile(layout, feed, {0.0, 0.0, 1.0}, 27.5e9);
    for (double phi : profile)
        CHECK(std::abs(wrap_phase(phi - profile.front())) < 1e-3);
}

TEST_CASE("two-element profile difference matches the sin-theta closed form") {
    const ArrayLayout layout = make_layout(1, 2, 2.35e-3, 2.35e-3);
    const Terminal feed = feed_at(30.0, 0.2);
    const std::vector<double> profile =
        phase_profile(layout, feed, {0.0, 0.0, 1.0}, 27.5e9);
    REQUIRE(profile.size() == 2);
    const double delta = std::abs(wrap_phase(profile[1] - profile[0]));
    const double closed_form = wavenumber(27.5e9) * std::sin(30.0 * deg) * 2.35e-3;
    CHECK(closed_form == doctest::Approx(0.677).epsilon(1e-3));
    CHECK(delta == doctest::Approx(closed_form).epsilon(0.01));
}

TEST_CASE("profile is invariant under joint geometry/frequency scaling") {
    const double s = 3.0;
    const ArrayLayout base = make_layout(5, 7, 2.35e-3, 2.35e-3);
    const ArrayLayout scaled = make_layout(5, 7, s * 2.35e-3, s * 2.35e-3);
    const Terminal feed = feed_at(40.0, 0.25);
    const Terminal feed_scaled = feed_at(40.0, s * 0.25);
    const Vec3 target = dir_at(-20.0);

    const auto a = phase_profile(base, feed, target, 27.5e9);
    const auto b = phase_profile(scaled, feed_scaled, target, 27.5e9 / s);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
}

TEST_CASE("specular target cancels the plane-wave phase gradient") {
    const ArrayLayout layout = make_layout(1, 10, 2.35e-3, 2.35e-3);
    const double theta = 35.0;
    const Terminal feed = Terminal::direction(dir_at(theta));
    const std::vector<double> profile =
        phase_profile(layout, feed, dir_at(-theta), 27.5e9);
    for (std::size_t j = 1; j < profile.size(); ++j)
        CHECK(std::abs(wrap_phase(profile[j] - profile[0])) < 1e-3);
}

TEST_CASE("profile rejects bad targets and feeds") {
    const ArrayLayout layout = make_layout(2, 2, 2.35e-3, 2.35e-3);
    CHECK_THROWS_AS(
        phase_profile(layout, feed_at(45.0, 0.2), {0.0, 0.0, 2.0}, 27.5e9),
        ConfigError);
    CHECK_THROWS_AS(phase_profile(layout, Terminal::position({0.0, 0.0, -0.1}),
                                  {0.0, 0.0, 1.0}, 27.5e9),
                    ConfigError);
}

TEST_CASE("quantization picks the phase-closest state") {
    const ArrayLayout layout = make_layout(1, 1, 2.35e-3, 2.35e-3);
    const UnitCellResponse resp = default_response();
    const double f = 27.5e9;
    const double phase_on = std::arg(reflection(resp, SwitchState::On, f));
    const double phase_off = std::arg(reflection(resp, SwitchState::Off, f));

    CHECK(quantize_1bit({phase_on}, layout, resp, f)[0][0] == 1);
    CHECK(quantize_1bit({phase_off}, layout, resp, f)[0][0] == 0);
}

TEST_CASE("quantization matches a closeness oracle on random profiles") {
    const ArrayLayout layout = make_layout(5, 5, 2.35e-3, 2.35e-3);
    const UnitCellResponse resp = default_response();
    const double f = 26e9;
    const double phase_on = std::arg(reflection(resp, SwitchState::On, f));
    const double phase_off = std::arg(reflection(resp, SwitchState::Off, f));

    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-pi, pi);
    std::vector<double> profile(25);
    for (double& phi : profile) phi = u(rng);

    const auto cells = quantize_1bit(profile, layout, resp, f);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const double target = profile[static_cast<std::size_t>(i * 5 + j)];
            const double d_on = std::abs(wrap_phase(target - phase_on));
            const double d_off = std::abs(wrap_phase(target - phase_off));
            const int expected = d_on < d_off ? 1 : 0;
            CHECK(cells[i][j] == expected);
            // The chosen state is never farther than the rejected one.
            const double chosen = cells[i][j] ? d_on : d_off;
            const double other = cells[i][j] ? d_off : d_on;
            CHECK(chosen <= other);
        }
}

TEST_CASE("column collapse takes the majority with ties to OFF") {
    std::vector<std::vector<std::uint8_t>> all_on(3, {1, 1});
    const PatternMask m1 = collapse_columns(all_on);
    CHECK(mask_to_bits(m1) == "11");
    REQUIRE(m1.cell_states.has_value());

    // 20 cells per column: 12 ON wins, a 10/10 split falls back to OFF.
    std::vector<std::vector<std::uint8_t>> cells(20, {0, 0});
    for (int i = 0; i < 12; ++i) cells[i][0] = 1;
    for (int i = 0; i < 10; ++i) cells[i][1] = 1;
    const PatternMask m2 = collapse_columns(cells);
    CHECK(mask_to_bits(m2) == "10");

    CHECK_THROWS_AS(collapse_columns({}), ConfigError);
    std::vector<std::vector<std::uint8_t>> ragged{{1, 0}, {1}};
    CHECK_THROWS_AS(collapse_columns(ragged), ConfigError);
}

TEST_CASE("single-cell contributions equal the element terms") {
    const ArrayLayout layout = make_layout(1, 1, 2.35e-3, 2.35e-3);
    const UnitCellResponse resp = default_response();
    const double f = 27.5e9;
    const Scene scene =
        make_scene(feed_at(30.0, 0.3), Terminal::direction(dir_at(0.0)), f);

    const ColumnContributions contrib =
        column_contributions(layout, resp, scene, f);
    REQUIRE(contrib.n_cols() == 1);

    const double k = wavenumber(f);
    const std::complex<double> w =
        terminal_weight(scene.tx, layout.position(0, 0), k, 1.0) *
        terminal_weight(scene.rx, layout.position(0, 0), k, 1.0);
    CHECK(std::abs(contrib.c_on[0] - reflection(resp, SwitchState::On, f) * w) <
          1e-15);
    CHECK(std::abs(contrib.c_off[0] - reflection(resp, SwitchState::Off, f) * w) <
          1e-15);
}

TEST_CASE("mirror-image columns contribute equally in a symmetric scene") {
    const ArrayLayout layout = make_layout(4, 6, 2.35e-3, 2.35e-3);
    const UnitCellResponse resp = default_response();
    const double f = 25e9;
    // Feed and observation both on the y-z plane: x -> -x symmetry.
    const Scene scene = make_scene(Terminal::position({0.0, 0.04, 0.3}),
                                   Terminal::direction({0.0, 0.0, 1.0}), f);
    const ColumnContributions contrib =
        column_contributions(layout, resp, scene, f);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(contrib.c_on[j] - contrib.c_on[5 - j]) <=
              1e-12 * std::abs(contrib.c_on[j]));
        CHECK(std::abs(contrib.c_off[j] - contrib.c_off[5 - j]) <=
              1e-12 * std::abs(contrib.c_off[j]));
    }
}

TEST_CASE("exhaustive search basics") {
    SUBCASE("real-positive contributions with ON dominant turn everything on") {
        ColumnContributions c;
        c.c_on = {{2.0, 0.0}, {3.0, 0.0}, {1.5, 0.0}};
        c.c_off = {{1.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}};
        CHECK(mask_to_bits(optimize_exhaustive(c)) == "111");
    }

    SUBCASE("opposite-sign tie resolves to the lexicographically smallest mask") {
        // Both all-ON (+2) and all-OFF (-2) reach |sum| = 2; the documented
        // tie-break (OFF preferred, first in MSB-first order) picks all-OFF.
        ColumnContributions c;
        c.c_on = {{1.0, 0.0}, {1.0, 0.0}};
        c.c_off = {{-1.0, 0.0}, {-1.0, 0.0}};
        const PatternMask mask = optimize_exhaustive(c);
        CHECK(mask_to_bits(mask) == "00");
        CHECK(mask_field_magnitude(c, mask) == doctest::Approx(2.0));
    }

    SUBCASE("strictly dominant ON pair is returned as all-ON") {
        ColumnContributions c;
        c.c_on = {{1.0, 0.0}, {1.0, 0.0}};
        c.c_off = {{-0.5, 0.0}, {-0.5, 0.0}};
        CHECK(mask_to_bits(optimize_exhaustive(c)) == "11");
    }

    SUBCASE("column count above the cap is rejected with guidance") {
        ColumnContributions c;
        c.c_on.assign(25, {1.0, 0.0});
        c.c_off.assign(25, {0.0, 0.0});
        CHECK_THROWS_AS(optimize_exhaustive(c), DomainError);
    }
}

TEST_CASE("exhaustive search matches the brute-force oracle on random instances") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        ColumnContributions c;
        for (int j = 0; j < 10; ++j) {
            c.c_on.push_back({u(rng), u(rng)});
            c.c_off.push_back({u(rng), u(rng)});
        }
        const PatternMask fast = optimize_exhaustive(c);
        const PatternMask slow = brute_force(c);
        CHECK(mask_to_bits(fast) == mask_to_bits(slow));
    }
}

TEST_CASE("global phase rotation leaves the argmax mask unchanged") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ColumnContributions c;
    for (int j = 0; j < 8; ++j) {
        c.c_on.push_back({u(rng), u(rng)});
        c.c_off.push_back({u(rng), u(rng)});
    }
    const std::string base = mask_to_bits(optimize_exhaustive(c));
    for (double alpha : {0.3, 1.1, 2.7, -2.0}) {
        const std::complex<double> rot = std::polar(1.0, alpha);
        ColumnContributions rotated;
        for (int j = 0; j < 8; ++j) {
            rotated.c_on.push_back(rot * c.c_on[static_cast<std::size_t>(j)]);
            rotated.c_off.push_back(rot * c.c_off[static_cast<std::size_t>(j)]);
        }
        CHECK(mask_to_bits(optimize_exhaustive(rotated)) == base);
    }
}

TEST_CASE("greedy ascent properties") {
    const UnitCellResponse resp = default_response();
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> angle(-60.0, 60.0);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    std::uniform_real_distribution<double> freq(23.5e9, 29.5e9);
    std::uniform_int_distribution<int> rows(4, 12);

    for (int trial = 0; trial < 20; ++trial) {
        const ArrayLayout layout = make_layout(rows(rng), 10, 2.35e-3, 2.35e-3);
        const double f = freq(rng);
        const Scene scene = make_scene(feed_at(angle(rng), dist(rng)),
                                       Terminal::direction(dir_at(angle(rng))), f);
        const std::vector<double> profile =
            phase_profile(layout, scene.tx, scene.rx.v, f);
        const PatternMask quantized =
            collapse_columns(quantize_1bit(profile, layout, resp, f));
        const ColumnContributions contrib =
            column_contributions(layout, resp, scene, f);

        const PatternMask greedy = optimize_greedy(contrib, quantized);
        const PatternMask exhaustive = optimize_exhaustive(contrib);

        const double v_q = mask_field_magnitude(contrib, quantized);
        const double v_g = mask_field_magnitude(contrib, greedy);
        const double v_e = mask_field_magnitude(contrib, exhaustive);

        // Optimality dominance chain.
        CHECK(v_g >= v_q * (1.0 - 1e-12));
        CHECK(v_e >= v_g * (1.0 - 1e-12));

        // Greedy terminates at a local optimum: no single flip improves.
        for (std::size_t j = 0; j < greedy.column_states.size(); ++j) {
            PatternMask flipped = greedy;
            flipped.column_states[j] ^= 1;
            CHECK(mask_field_magnitude(contrib, flipped) <= v_g * (1.0 + 1e-12));
        }

        // Feeding the global optimum back in returns it unchanged.
        const PatternMask refined = optimize_greedy(contrib, exhaustive);
        CHECK(mask_field_magnitude(contrib, refined) ==
              doctest::Approx(v_e).epsilon(1e-12));
    }
}
