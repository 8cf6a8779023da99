#include "ris/link.hpp"

#include <cmath>
#include <limits>

namespace ris {

void RadarLinkParams::validate() const {
    if (!(efficiency_tx > 0.0 && efficiency_tx <= 1.0) ||
        !(efficiency_rx > 0.0 && efficiency_rx <= 1.0))
        throw ConfigError("efficiencies must lie in (0, 1]");
    if (!(mismatch_tx >= 0.0 && mismatch_tx < 1.0) ||
        !(mismatch_rx >= 0.0 && mismatch_rx < 1.0))
        throw ConfigError("port mismatch magnitudes must lie in [0, 1)");
    if (!(directivity_tx > 0.0) || !(directivity_rx > 0.0))
        throw ConfigError("directivities must be > 0");
    if (!(wavelength_m > 0.0)) throw ConfigError("wavelength must be > 0");
    if (!(r1_m > 0.0) || !(r2_m > 0.0)) throw ConfigError("distances must be > 0");
    if (!(polarization_match >= 0.0 && polarization_match <= 1.0))
        throw ConfigError("polarization match must lie in [0, 1]");
    if (!(sigma_m2 >= 0.0)) throw ConfigError("cross-section must be >= 0");
}

double radar_received_ratio(const RadarLinkParams& p) {
    p.validate();
    const double four_pi = 4.0 * pi;
    const double numer = p.efficiency_tx * p.efficiency_rx *
                         (1.0 - p.mismatch_tx * p.mismatch_tx) *
                         (1.0 - p.mismatch_rx * p.mismatch_rx) *
                         p.directivity_tx * p.directivity_rx *
                         p.wavelength_m * p.wavelength_m * p.sigma_m2 *
                         p.polarization_match * p.polarization_match;
    const double denom =
        four_pi * four_pi * four_pi * p.r1_m * p.r1_m * p.r2_m * p.r2_m;
    return numer / denom;
}

double radar_received_ratio_db(const RadarLinkParams& p) {
    const double ratio = radar_received_ratio(p);
    if (ratio <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

double far_field_distance(const ArrayLayout& layout, double f_hz) {
    const double ax = layout.aperture_x();
    const double ay = layout.aperture_y();
    const double diag = std::sqrt(ax * ax + ay * ay);
    return 2.0 * diag * diag / wavelength(f_hz);
}

double enhancement_far(const ArrayLayout& layout, const PatternMask& mask,
                       const UnitCellResponse& resp, double incidence_deg,
                       double f_hz, const FieldOptions& opts) {
    if (incidence_deg < -90.0 || incidence_deg > 90.0)
        throw ConfigError("incidence angle must lie within [-90, 90] degrees");
    const double rad = incidence_deg * pi / 180.0;
    const Vec3 inc{std::sin(rad), 0.0, std::cos(rad)};
    const Vec3 obs{0.0, 0.0, 1.0};
    const double sigma_mask = rcs(layout, mask, resp, inc, obs, f_hz, opts);
    PatternMask all_off;
    all_off.column_states.assign(static_cast<std::size_t>(layout.n_cols), 0);
    const double sigma_ref = rcs(layout, all_off, resp, inc, obs, f_hz, opts);
    if (sigma_ref == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sigma_mask / sigma_ref);
}

}  // namespace ris
