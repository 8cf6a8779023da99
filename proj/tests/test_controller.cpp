#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ris/controller.hpp"

using namespace ris;

TEST_CASE("mask packing is MSB-first with zero padding") {
    PatternMask all_off;
    all_off.column_states.assign(20, 0);
    CHECK(encode_mask(all_off) == std::vector<std::uint8_t>{0x00, 0x00, 0x00});

    // Columns 0-9 ON, 10-19 OFF: 1111111111 0000000000 + 4 pad bits.
    PatternMask half;
    half.column_states.assign(20, 0);
    for (int j = 0; j < 10; ++j) half.column_states[static_cast<std::size_t>(j)] = 1;
    CHECK(encode_mask(half) == std::vector<std::uint8_t>{0xFF, 0xC0, 0x00});

    // Column 0 is the most significant bit of byte 0.
    PatternMask first;
    first.column_states = {1, 0, 0};
    CHECK(encode_mask(first) == std::vector<std::uint8_t>{0x80});

    CHECK_THROWS_AS(encode_mask(PatternMask{}), ConfigError);
}

TEST_CASE("decode inverts encode for random masks") {
    std::mt19937 rng(23);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<int> width(1, 64);
    for (int trial = 0; trial < 500; ++trial) {
        PatternMask mask;
        const int n = width(rng);
        for (int j = 0; j < n; ++j) mask.column_states.push_back(bit(rng) ? 1 : 0);
        const PatternMask back = decode_mask(encode_mask(mask), n);
        CHECK(back.column_states == mask.column_states);
    }

    CHECK_THROWS_AS(decode_mask({0x00}, 9), ConfigError);   // needs two bytes
    CHECK_THROWS_AS(decode_mask({0x00, 0x00}, 0), ConfigError);
}

TEST_CASE("command frame layout and checksum") {
    PatternMask all_off;
    all_off.column_states.assign(20, 0);
    const CommandFrame frame = frame_command(all_off);
    CHECK(frame.bytes ==
          std::vector<std::uint8_t>{0xA5, 0x01, 0x03, 0x00, 0x00, 0x00, 0xA7});
    CHECK(bytes_to_hex(frame.bytes) == "A5 01 03 00 00 00 A7");
    CHECK(verify_frame(frame.bytes));

    const PatternMask decoded = decode_frame(frame, 20);
    CHECK(decoded.column_states == all_off.column_states);

    // Any single corrupted payload byte breaks verification.
    for (std::size_t i = 3; i + 1 < frame.bytes.size(); ++i) {
        auto corrupted = frame.bytes;
        corrupted[i] ^= 0x40;
        CHECK_FALSE(verify_frame(corrupted));
    }
    // So do a bad sync byte, a truncated frame, and a wrong length byte.
    auto bad = frame.bytes;
    bad[0] = 0x5A;
    CHECK_FALSE(verify_frame(bad));
    auto truncated = frame.bytes;
    truncated.pop_back();
    CHECK_FALSE(verify_frame(truncated));
    CHECK_FALSE(verify_frame({}));
}

TEST_CASE("frame round trip over random masks") {
    std::mt19937 rng(31);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<int> width(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        PatternMask mask;
        const int n = width(rng);
        for (int j = 0; j < n; ++j) mask.column_states.push_back(bit(rng) ? 1 : 0);
        const CommandFrame frame = frame_command(mask);
        CHECK(verify_frame(frame.bytes));
        CHECK(decode_frame(frame, n).column_states == mask.column_states);
    }
}

TEST_CASE("transition feasibility compares supply to the series threshold sum") {
    BiasChainSpec spec;  // 20 cells in series, 40 V rail
    CHECK(transition_feasible(spec, 2.0));  // boundary: 20 * 2 V = 40 V

    BiasChainSpec weak = spec;
    weak.v_supply_v = 30.0;
    CHECK_FALSE(transition_feasible(weak, 2.0));

    BiasChainSpec single = spec;
    single.n_series_per_column = 1;
    single.v_supply_v = 5.0;
    CHECK(transition_feasible(single, 2.0));

    // Monotone in supply, antitone in chain length.
    BiasChainSpec more = spec;
    more.v_supply_v = 41.0;
    CHECK(transition_feasible(more, 2.0));
    BiasChainSpec longer = spec;
    longer.n_series_per_column = 21;
    CHECK_FALSE(transition_feasible(longer, 2.0));

    CHECK_THROWS_AS(transition_feasible(spec, 0.0), ConfigError);
}

TEST_CASE("bias power accounting") {
    const BiasChainSpec spec;  // defaults: 20x4 ohm chain + 4.7 ohm, 0.1 A, 40 V

    PatternMask one;
    one.column_states.assign(20, 0);
    one.column_states[3] = 1;
    const PowerBreakdown single = bias_power(spec, one);
    CHECK(single.n_on == 1);
    CHECK(single.per_column_switch_w == doctest::Approx(0.847).epsilon(1e-12));
    CHECK(single.per_column_supply_w == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(single.total_switch_w == doctest::Approx(0.847).epsilon(1e-12));
    CHECK(single.total_supply_w == doctest::Approx(4.0).epsilon(1e-12));

    PatternMask none;
    none.column_states.assign(20, 0);
    const PowerBreakdown idle = bias_power(spec, none);
    CHECK(idle.n_on == 0);
    CHECK(idle.total_switch_w == 0.0);
    CHECK(idle.total_supply_w == 0.0);

    PatternMask all;
    all.column_states.assign(20, 1);
    const PowerBreakdown full = bias_power(spec, all);
    CHECK(full.total_switch_w == doctest::Approx(16.94).epsilon(1e-9));
    CHECK(full.total_supply_w == doctest::Approx(80.0).epsilon(1e-9));

    // Additive over columns: totals scale linearly with the ON count.
    PatternMask seven;
    seven.column_states.assign(20, 0);
    for (int j = 0; j < 7; ++j) seven.column_states[static_cast<std::size_t>(j)] = 1;
    const PowerBreakdown partial = bias_power(spec, seven);
    CHECK(partial.total_switch_w ==
          doctest::Approx(7.0 * single.per_column_switch_w).epsilon(1e-12));

    PatternMask wrong_width;
    wrong_width.column_states.assign(10, 0);
    CHECK_THROWS_AS(bias_power(spec, wrong_width), ConfigError);

    BiasChainSpec bad = spec;
    bad.i_hold_a = 0.0;
    CHECK_THROWS_AS(bias_power(bad, all), ConfigError);
}

TEST_CASE("hex rendering") {
    CHECK(bytes_to_hex({0xA5}) == "A5");
    CHECK(bytes_to_hex({0x00, 0xFF, 0x0C}) == "00 FF 0C");
    CHECK(bytes_to_hex({}) == "");
}
