#include "ris/controller.hpp"

#include <cstdio>

namespace ris {

namespace {
constexpr std::uint8_t kSync = 0xA5;
constexpr std::uint8_t kCmdSetPattern = 0x01;
constexpr std::size_t kMaxColumns = 255u * 8u;  // one length byte of payload
}  // namespace

void BiasChainSpec::validate() const {
    if (n_columns <= 0 || n_series_per_column <= 0)
        throw ConfigError("chain dimensions must be positive");
    if (!(i_hold_a > 0.0) || !(v_supply_v > 0.0) || !(r_feedback_ohm > 0.0) ||
        !(r_on_per_switch_ohm > 0.0))
        throw ConfigError("chain electrical values must be positive");
}

std::vector<std::uint8_t> encode_mask(const PatternMask& mask) {
    const std::size_t n = mask.column_states.size();
    if (n == 0) throw ConfigError("mask must have at least one column");
    if (n > kMaxColumns)
        throw ConfigError("mask exceeds the one-byte payload length capacity");
    std::vector<std::uint8_t> payload((n + 7) / 8, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (mask.column_states[j] != 0)
            payload[j / 8] |= static_cast<std::uint8_t>(0x80u >> (j % 8));
    }
    return payload;
}

PatternMask decode_mask(const std::vector<std::uint8_t>& payload, int n_columns) {
    if (n_columns <= 0) throw ConfigError("column count must be positive");
    const std::size_t n = static_cast<std::size_t>(n_columns);
    if (payload.size() != (n + 7) / 8)
        throw ConfigError("payload size does not match the column count");
    PatternMask mask;
    mask.column_states.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        mask.column_states[j] =
            (payload[j / 8] & static_cast<std::uint8_t>(0x80u >> (j % 8))) ? 1 : 0;
    return mask;
}

CommandFrame frame_command(const PatternMask& mask) {
    const std::vector<std::uint8_t> payload = encode_mask(mask);
    CommandFrame frame;
    frame.bytes.reserve(payload.size() + 4);
    frame.bytes.push_back(kSync);
    frame.bytes.push_back(kCmdSetPattern);
    frame.bytes.push_back(static_cast<std::uint8_t>(payload.size()));
    frame.bytes.insert(frame.bytes.end(), payload.begin(), payload.end());
    std::uint8_t checksum = 0;
    for (std::uint8_t b : frame.bytes) checksum ^= b;
    frame.bytes.push_back(checksum);
    return frame;
}

bool verify_frame(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4) return false;
    if (bytes[0] != kSync || bytes[1] != kCmdSetPattern) return false;
    const std::size_t payload_len = bytes[2];
    if (bytes.size() != payload_len + 4) return false;
    std::uint8_t checksum = 0;
    for (std::size_t i = 0; i + 1 < bytes.size(); ++i) checksum ^= bytes[i];
    return checksum == bytes.back();
}

PatternMask decode_frame(const CommandFrame& frame, int n_columns) {
    if (!verify_frame(frame.bytes)) throw ConfigError("malformed command frame");
    const std::vector<std::uint8_t> payload(frame.bytes.begin() + 3,
                                            frame.bytes.end() - 1);
    return decode_mask(payload, n_columns);
}

bool transition_feasible(const BiasChainSpec& spec, double v_threshold_per_switch_v) {
    spec.validate();
    if (!(v_threshold_per_switch_v > 0.0))
        throw ConfigError("per-switch threshold voltage must be positive");
    return spec.v_supply_v >= spec.n_series_per_column * v_threshold_per_switch_v;
}

PowerBreakdown bias_power(const BiasChainSpec& spec, const PatternMask& mask) {
    spec.validate();
    if (static_cast<int>(mask.column_states.size()) != spec.n_columns)
        throw ConfigError("mask column count does not match the chain spec");
    PowerBreakdown out;
    out.per_column_switch_w =
        spec.i_hold_a * spec.i_hold_a *
        (spec.n_series_per_column * spec.r_on_per_switch_ohm + spec.r_feedback_ohm);
    out.per_column_supply_w = spec.v_supply_v * spec.i_hold_a;
    for (std::uint8_t s : mask.column_states)
        if (s != 0) ++out.n_on;
    out.total_switch_w = out.per_column_switch_w * out.n_on;
    out.total_supply_w = out.per_column_supply_w * out.n_on;
    return out;
}

std::string bytes_to_hex(const std::vector<std::uint8_t>& bytes) {
    std::string text;
    text.reserve(bytes.size() * 3);
    char buf[4];
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%02X", bytes[i]);
        if (i != 0) text.push_back(' ');
        text += buf;
    }
    return text;
}

}  // namespace ris
