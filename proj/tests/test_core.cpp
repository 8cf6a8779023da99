#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ris/core.hpp"

using namespace ris;

TEST_CASE("wavenumber and wavelength follow 2*pi*f/c and c/f") {
    CHECK(wavenumber(27.5e9) == doctest::Approx(2.0 * pi * 27.5e9 / c0).epsilon(1e-15));
    CHECK(wavenumber(27.5e9) == doctest::Approx(576.357).epsilon(1e-4));
    CHECK(wavenumber(23.5e9) == doctest::Approx(492.524).epsilon(1e-4));
    CHECK(wavelength(27.5e9) * 27.5e9 == doctest::Approx(c0).epsilon(1e-15));
    CHECK_THROWS_AS(wavenumber(0.0), DomainError);
    CHECK_THROWS_AS(wavelength(-1.0), DomainError);
}

TEST_CASE("vector algebra") {
    const Vec3 a{1.0, 2.0, 3.0};
    const Vec3 b{-1.0, 0.5, 2.0};
    CHECK(a.dot(b) == doctest::Approx(6.0));
    CHECK((a + b).x == doctest::Approx(0.0));
    CHECK((a - b).y == doctest::Approx(1.5));
    CHECK((a * 2.0).z == doctest::Approx(6.0));
    CHECK(Vec3{3.0, 4.0, 0.0}.norm() == doctest::Approx(5.0));
    CHECK(Vec3{0.0, 0.0, 1.0}.is_unit());
    CHECK_FALSE(Vec3{0.0, 0.0, 1.001}.is_unit());
}

TEST_CASE("layout centering puts the grid centroid at the origin") {
    const ArrayLayout layout = make_layout(20, 20, 2.35e-3, 2.35e-3);

    Vec3 centroid{0.0, 0.0, 0.0};
    for (int i = 0; i < layout.n_rows; ++i)
        for (int j = 0; j < layout.n_cols; ++j) centroid = centroid + layout.position(i, j);
    CHECK(centroid.norm() == doctest::Approx(0.0));

    // Corner elements sit half a (n-1)-span from the center.
    const Vec3 first = layout.position(0, 0);
    CHECK(first.x == doctest::Approx(-19.0 / 2.0 * 2.35e-3));
    CHECK(first.y == doctest::Approx(-19.0 / 2.0 * 2.35e-3));
    CHECK(first.z == 0.0);
    const Vec3 last = layout.position(19, 19);
    CHECK(last.x == doctest::Approx(-first.x));
    CHECK(last.y == doctest::Approx(-first.y));

    // Odd grid: the middle element lands exactly on the origin.
    const ArrayLayout odd = make_layout(3, 5, 1e-3, 2e-3);
    const Vec3 mid = odd.position(1, 2);
    CHECK(mid.x == 0.0);
    CHECK(mid.y == 0.0);
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(make_layout(0, 20, 2.35e-3, 2.35e-3), ConfigError);
    CHECK_THROWS_AS(make_layout(20, -1, 2.35e-3, 2.35e-3), ConfigError);
    CHECK_THROWS_AS(make_layout(20, 20, 0.0, 2.35e-3), ConfigError);
    CHECK_THROWS_AS(make_layout(20, 20, 2.35e-3, -2.35e-3), ConfigError);
}

TEST_CASE("aperture and electrical size") {
    const ArrayLayout layout = make_layout(20, 20, 2.35e-3, 2.35e-3);
    CHECK(layout.aperture_x() == doctest::Approx(0.047));
    CHECK(layout.aperture_y() == doctest::Approx(0.047));

    const auto [ex, ey] = electrical_size(layout, 27.5e9);
    CHECK(ex == doctest::Approx(0.047 / wavelength(27.5e9)).epsilon(1e-12));
    CHECK(ex == doctest::Approx(4.311).epsilon(1e-3));
    CHECK(ey == doctest::Approx(ex).epsilon(1e-12));
}

TEST_CASE("element distances match direct evaluation") {
    const ArrayLayout layout = make_layout(2, 2, 1e-3, 2e-3);
    const Vec3 p{0.01, -0.02, 0.3};
    const std::vector<double> d = element_distances(layout, p);
    REQUIRE(d.size() == 4);
    std::size_t idx = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Vec3 e = layout.position(i, j);
            CHECK(d[idx++] == doctest::Approx((p - e).norm()).epsilon(1e-15));
        }

    // A point sitting exactly on an element is degenerate.
    CHECK_THROWS_AS(element_distances(layout, layout.position(0, 0)), DomainError);
}

TEST_CASE("mask bit-string round trip") {
    const PatternMask mask = mask_from_bits("10110");
    REQUIRE(mask.n_cols() == 5);
    CHECK(mask.column_states[0] == 1);
    CHECK(mask.column_states[1] == 0);
    CHECK(mask.column_states[4] == 0);
    CHECK(mask_to_bits(mask) == "10110");

    CHECK_THROWS_AS(mask_from_bits(""), ConfigError);
    CHECK_THROWS_AS(mask_from_bits("10del2"), ConfigError);
}

TEST_CASE("mask JSON round trip") {
    const PatternMask mask = mask_from_bits("0110001");
    const std::string text = mask_to_json(mask);
    CHECK(text == "{\"columns\":[0,1,1,0,0,0,1]}");
    const PatternMask back = mask_from_json(text);
    CHECK(mask_to_bits(back) == "0110001");

    CHECK(mask_to_bits(mask_from_json("{\"columns\": [1, 0]}")) == "10");
    CHECK_THROWS_AS(mask_from_json("{\"columns\": []}"), ConfigError);
    CHECK_THROWS_AS(mask_from_json("{\"columns\": [2]}"), ConfigError);
    CHECK_THROWS_AS(mask_from_json("{\"cols\": [1]}"), ConfigError);
    CHECK_THROWS_AS(mask_from_json("not json"), ConfigError);
}

TEST_CASE("scene validation") {
    const Terminal tx = Terminal::position({0.1, 0.0, 0.2});
    const Terminal rx = Terminal::direction({0.0, 0.0, 1.0});
    const Scene scene = make_scene(tx, rx, 27.5e9);
    CHECK(scene.frequency == 27.5e9);
    CHECK(scene.polarization_tx.x == 1.0);

    // Terminals must sit in front of the aperture.
    CHECK_THROWS_AS(make_scene(Terminal::position({0.0, 0.0, -0.1}), rx, 27.5e9),
                    DomainError);
    CHECK_THROWS_AS(make_scene(Terminal::position({0.0, 0.0, 0.0}), rx, 27.5e9),
                    DomainError);
    // Directions must be unit length.
    CHECK_THROWS_AS(make_scene(tx, Terminal::direction({0.0, 0.0, 2.0}), 27.5e9),
                    DomainError);
    // Frequency must be positive.
    CHECK_THROWS_AS(make_scene(tx, rx, 0.0), DomainError);
    // Polarizations must be unit length.
    CHECK_THROWS_AS(make_scene(tx, rx, 27.5e9, Vec3{2.0, 0.0, 0.0}), DomainError);
}
