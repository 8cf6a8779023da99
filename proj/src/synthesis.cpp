#include "ris/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace ris {

namespace {

// Distance at which a receding positional source is indistinguishable from
// a plane wave for any aperture this library handles.
constexpr double kPlaneWaveFeedDistance = 1.0e6;

Vec3 feed_position(const Terminal& feed) {
    if (feed.kind == Terminal::Kind::Position) return feed.v;
    return Vec3{feed.v.x * kPlaneWaveFeedDistance, feed.v.y * kPlaneWaveFeedDistance,
                feed.v.z * kPlaneWaveFeedDistance};
}

}  // namespace

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * pi);
    if (w <= -pi) w += 2.0 * pi;
    return w;
}

std::vector<double> phase_profile(const ArrayLayout& layout, const Terminal& feed,
                                  const Vec3& target_dir, double f_hz) {
    if (!target_dir.is_unit())
        throw ConfigError("target direction must be a unit vector");
    if (feed.kind == Terminal::Kind::Direction && !feed.v.is_unit())
        throw ConfigError("feed direction must be a unit vector");
    if (feed.kind == Terminal::Kind::Position && feed.v.z <= 0.0)
        throw ConfigError("feed must lie in the z > 0 half space");
    const double k = wavenumber(f_hz);
    const Vec3 fp = feed_position(feed);
    std::vector<double> profile;
    profile.reserve(static_cast<std::size_t>(layout.n_rows) *
                    static_cast<std::size_t>(layout.n_cols));
    for (int i = 0; i < layout.n_rows; ++i) {
        for (int j = 0; j < layout.n_cols; ++j) {
            const Vec3 pos = layout.position(i, j);
            const Vec3 d{fp.x - pos.x, fp.y - pos.y, fp.z - pos.z};
            const double dist = d.norm();
            if (dist <= 0.0) throw DomainError("feed coincides with an element");
            const double phi = k * dist - k * target_dir.dot(pos);
            profile.push_back(wrap_phase(phi));
        }
    }
    return profile;
}

std::vector<std::vector<std::uint8_t>> quantize_1bit(
    const std::vector<double>& profile, const ArrayLayout& layout,
    const UnitCellResponse& resp, double f_hz) {
    const std::size_t expected = static_cast<std::size_t>(layout.n_rows) *
                                 static_cast<std::size_t>(layout.n_cols);
    if (profile.size() != expected)
        throw ConfigError("phase profile size does not match the layout");
    const double phase_on = std::arg(reflection(resp, SwitchState::On, f_hz));
    const double phase_off = std::arg(reflection(resp, SwitchState::Off, f_hz));
    std::vector<std::vector<std::uint8_t>> cells(
        static_cast<std::size_t>(layout.n_rows),
        std::vector<std::uint8_t>(static_cast<std::size_t>(layout.n_cols), 0));
    for (int i = 0; i < layout.n_rows; ++i) {
        for (int j = 0; j < layout.n_cols; ++j) {
            const double target =
                profile[static_cast<std::size_t>(i) *
                            static_cast<std::size_t>(layout.n_cols) +
                        static_cast<std::size_t>(j)];
            const double d_on = std::abs(wrap_phase(target - phase_on));
            const double d_off = std::abs(wrap_phase(target - phase_off));
            cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (d_on < d_off) ? 1 : 0;  // tie -> OFF
        }
    }
    return cells;
}

PatternMask collapse_columns(const std::vector<std::vector<std::uint8_t>>& cells) {
    if (cells.empty() || cells.front().empty())
        throw ConfigError("cell state matrix must be non-empty");
    const std::size_t n_cols = cells.front().size();
    for (const auto& row : cells)
        if (row.size() != n_cols)
            throw ConfigError("cell state matrix rows must have equal length");
    PatternMask mask;
    mask.column_states.assign(n_cols, 0);
    for (std::size_t j = 0; j < n_cols; ++j) {
        std::size_t on = 0;
        for (const auto& row : cells)
            if (row[j] != 0) ++on;
        mask.column_states[j] = (2 * on > cells.size()) ? 1 : 0;  // tie -> OFF
    }
    mask.cell_states = cells;
    return mask;
}

ColumnContributions column_contributions(const ArrayLayout& layout,
                                         const UnitCellResponse& resp,
                                         const Scene& scene, double f_hz,
                                         const FieldOptions& opts) {
    const std::complex<double> g_on = reflection(resp, SwitchState::On, f_hz);
    const std::complex<double> g_off = reflection(resp, SwitchState::Off, f_hz);
    const std::vector<std::complex<double>> sums =
        column_sums(layout, scene, f_hz, opts);
    ColumnContributions contrib;
    contrib.f_hz = f_hz;
    contrib.c_on.reserve(sums.size());
    contrib.c_off.reserve(sums.size());
    for (const std::complex<double>& s : sums) {
        contrib.c_on.push_back(g_on * s);
        contrib.c_off.push_back(g_off * s);
    }
    return contrib;
}

double mask_field_magnitude(const ColumnContributions& contrib,
                            const PatternMask& mask) {
    if (mask.column_states.size() != contrib.n_cols())
        throw ConfigError("mask column count does not match the contributions");
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < contrib.n_cols(); ++j)
        sum += (mask.column_states[j] != 0) ? contrib.c_on[j] : contrib.c_off[j];
    return std::abs(sum);
}

PatternMask optimize_exhaustive(const ColumnContributions& contrib) {
    const std::size_t n = contrib.n_cols();
    if (n == 0) throw ConfigError("contributions must cover at least one column");
    if (n > 24)
        throw DomainError(
            "exhaustive search is capped at 24 columns; use the greedy optimizer");

    // Walk masks in increasing integer order with column 0 as the most
    // significant bit. Successive integers differ in a suffix of bits, so
    // the running sum is patched per flipped bit; the total number of
    // flips over the whole walk is 2^(n+1) - 2, amortized O(1) per mask.
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) sum += contrib.c_off[j];

    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t best_code = 0;
    double best_norm = std::norm(sum);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t changed = code ^ (code - 1);
        while (changed != 0) {
            const unsigned bit = static_cast<unsigned>(__builtin_ctzll(changed));
            changed &= changed - 1;
            const std::size_t j = n - 1 - bit;  // column 0 = MSB
            if ((code >> bit) & 1ULL)
                sum += contrib.c_on[j] - contrib.c_off[j];
            else
                sum += contrib.c_off[j] - contrib.c_on[j];
        }
        const double norm = std::norm(sum);
        if (norm > best_norm) {  // strict: first (lexicographically
            best_norm = norm;    // smallest) mask wins ties
            best_code = code;
        }
    }

    PatternMask mask;
    mask.column_states.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        mask.column_states[j] =
            static_cast<std::uint8_t>((best_code >> (n - 1 - j)) & 1ULL);
    return mask;
}

namespace {

struct AscentResult {
    std::vector<std::uint8_t> states;
    double norm = 0.0;
};

AscentResult flip_ascent(const ColumnContributions& contrib,
                         std::vector<std::uint8_t> states) {
    const std::size_t n = contrib.n_cols();
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j)
        sum += (states[j] != 0) ? contrib.c_on[j] : contrib.c_off[j];
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t j = 0; j < n; ++j) {
            const std::complex<double> delta =
                (states[j] != 0) ? contrib.c_off[j] - contrib.c_on[j]
                                 : contrib.c_on[j] - contrib.c_off[j];
            const std::complex<double> alt = sum + delta;
            if (std::norm(alt) > std::norm(sum)) {
                states[j] ^= 1;
                sum = alt;
                improved = true;
            }
        }
    }
    return AscentResult{std::move(states), std::norm(sum)};
}

}  // namespace

PatternMask optimize_greedy(const ColumnContributions& contrib,
                            const std::optional<PatternMask>& initial) {
    const std::size_t n = contrib.n_cols();
    if (n == 0) throw ConfigError("contributions must cover at least one column");

    AscentResult best = flip_ascent(contrib, std::vector<std::uint8_t>(n, 0));
    if (initial) {
        if (initial->column_states.size() != n)
            throw ConfigError("initial mask column count does not match");
        const bool all_off =
            std::all_of(initial->column_states.begin(), initial->column_states.end(),
                        [](std::uint8_t s) { return s == 0; });
        if (!all_off) {
            AscentResult alt = flip_ascent(contrib, initial->column_states);
            if (alt.norm > best.norm ||
                (alt.norm == best.norm && alt.states < best.states))
                best = std::move(alt);
        }
    }

    PatternMask mask;
    mask.column_states = std::move(best.states);
    return mask;
}

}  // namespace ris
