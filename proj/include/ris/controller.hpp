#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ris/core.hpp"

namespace ris {

/// Electrical description of one bias chain per column: n series-connected
/// cells driven by a constant-current sink from a fixed supply rail.
struct BiasChainSpec {
    int n_columns = 20;
    int n_series_per_column = 20;
    double i_hold_a = 0.1;
    double v_supply_v = 40.0;
    double r_feedback_ohm = 4.7;
    double r_on_per_switch_ohm = 4.0;

    void validate() const;
};

/// Pack column states MSB-first: column 0 occupies the most significant
/// bit of byte 0; unused trailing bits are zero. Bijective for a fixed
/// column count (decode_mask inverts it).
std::vector<std::uint8_t> encode_mask(const PatternMask& mask);

PatternMask decode_mask(const std::vector<std::uint8_t>& payload, int n_columns);

/// Byte frame: sync 0xA5, command 0x01 (set pattern), payload length,
/// payload, then an XOR checksum over all prior bytes.
struct CommandFrame {
    std::vector<std::uint8_t> bytes;
};

CommandFrame frame_command(const PatternMask& mask);

/// True iff the byte sequence is a well-formed set-pattern frame with a
/// matching checksum.
bool verify_frame(const std::vector<std::uint8_t>& bytes);

/// Recover the column mask from a verified frame.
PatternMask decode_frame(const CommandFrame& frame, int n_columns);

/// True iff the supply rail can break over every cell in the chain at
/// once: v_supply >= n_series * v_threshold_per_switch.
bool transition_feasible(const BiasChainSpec& spec, double v_threshold_per_switch_v);

struct PowerBreakdown {
    double per_column_switch_w = 0.0;  // i^2 * (n_series*r_on + r_feedback)
    double per_column_supply_w = 0.0;  // v_supply * i_hold
    double total_switch_w = 0.0;
    double total_supply_w = 0.0;
    int n_on = 0;
};

/// OFF columns draw nothing; each ON column dissipates i^2*(n*r_on + r_fb)
/// in its chain and draws v_supply*i_hold from the rail (the linear sink
/// burns the difference).
PowerBreakdown bias_power(const BiasChainSpec& spec, const PatternMask& mask);

/// "A5 01 03 00 00 00 A7" style rendering, uppercase, space separated.
std::string bytes_to_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace ris
