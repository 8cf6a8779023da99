#include "ris/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ris {

double horn_directivity(double q_horn) {
    if (q_horn < 0.0) throw DomainError("horn pattern exponent must be >= 0");
    return 2.0 * (q_horn + 1.0);
}

std::complex<double> terminal_weight(const Terminal& t, const Vec3& element,
                                     double k, double q) {
    if (t.kind == Terminal::Kind::Position) {
        const Vec3 d{t.v.x - element.x, t.v.y - element.y, t.v.z - element.z};
        const double r = d.norm();
        if (r <= 0.0) throw DomainError("terminal coincides with an element");
        const double cos_theta = d.z / r;
        if (cos_theta <= 0.0) return {0.0, 0.0};  // behind the aperture plane
        const double amp = std::pow(cos_theta, q) / r;
        return std::polar(amp, -k * r);
    }
    // Directional terminal: plane wave along unit vector t.v.
    const double cos_theta = t.v.z;
    if (cos_theta <= 0.0) return {0.0, 0.0};
    const double amp = std::pow(cos_theta, q);
    const double phase = k * t.v.dot(element);
    return std::polar(amp, phase);
}

std::vector<std::complex<double>> column_sums(const ArrayLayout& layout,
                                              const Scene& scene, double f_hz,
                                              const FieldOptions& opts) {
    if (opts.q_element < 0.0)
        throw DomainError("element pattern exponent must be >= 0");
    const double k = wavenumber(f_hz);
    std::vector<std::complex<double>> sums(
        static_cast<std::size_t>(layout.n_cols), {0.0, 0.0});
    for (int i = 0; i < layout.n_rows; ++i) {
        for (int j = 0; j < layout.n_cols; ++j) {
            const Vec3 pos = layout.position(i, j);
            const std::complex<double> wt =
                terminal_weight(scene.tx, pos, k, opts.q_element);
            const std::complex<double> wr =
                terminal_weight(scene.rx, pos, k, opts.q_element);
            sums[static_cast<std::size_t>(j)] += wt * wr;
        }
    }
    return sums;
}

FieldResult scattered_field(const ArrayLayout& layout, const PatternMask& mask,
                            const UnitCellResponse& resp, const Scene& scene,
                            double f_hz, const FieldOptions& opts) {
    if (mask.n_cols() != layout.n_cols)
        throw ConfigError("mask column count does not match the layout");
    const std::complex<double> g_on = reflection(resp, SwitchState::On, f_hz);
    const std::complex<double> g_off = reflection(resp, SwitchState::Off, f_hz);
    const std::vector<std::complex<double>> sums =
        column_sums(layout, scene, f_hz, opts);
    std::complex<double> e{0.0, 0.0};
    for (int j = 0; j < layout.n_cols; ++j) {
        const bool on = mask.column_states[static_cast<std::size_t>(j)] != 0;
        e += (on ? g_on : g_off) * sums[static_cast<std::size_t>(j)];
    }
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw DomainError("scattered field is not finite");
    return FieldResult{e, f_hz};
}

Enhancement gain_enhancement(const ArrayLayout& layout, const PatternMask& mask,
                             const UnitCellResponse& resp, const Scene& scene,
                             double f_hz, const FieldOptions& opts) {
    const double e_mask =
        std::abs(scattered_field(layout, mask, resp, scene, f_hz, opts).amplitude);
    PatternMask all_off;
    all_off.column_states.assign(static_cast<std::size_t>(layout.n_cols), 0);
    const double e_ref =
        std::abs(scattered_field(layout, all_off, resp, scene, f_hz, opts).amplitude);
    Enhancement out;
    if (e_ref == 0.0) {
        out.db = std::numeric_limits<double>::infinity();
        out.reference_zero = true;
        return out;
    }
    out.db = 20.0 * std::log10(e_mask / e_ref);
    return out;
}

PatternCut pattern_cut(const ArrayLayout& layout, const PatternMask& mask,
                       const UnitCellResponse& resp, const Terminal& incidence,
                       double f_hz, double start_deg, double stop_deg,
                       double step_deg, const FieldOptions& opts) {
    if (step_deg <= 0.0) throw ConfigError("cut step must be > 0");
    if (stop_deg < start_deg) throw ConfigError("cut stop must be >= start");
    if (start_deg < -90.0 || stop_deg > 90.0)
        throw ConfigError("cut angles must lie within [-90, 90] degrees");

    PatternCut cut;
    const int n = static_cast<int>(std::floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1;
    cut.angle_deg.reserve(static_cast<std::size_t>(n));
    cut.value_db.reserve(static_cast<std::size_t>(n));

    std::vector<double> mags;
    mags.reserve(static_cast<std::size_t>(n));
    double peak = 0.0;
    for (int s = 0; s < n; ++s) {
        const double ang = start_deg + step_deg * s;
        const double rad = ang * pi / 180.0;
        Scene scene;
        scene.tx = incidence;
        scene.rx = Terminal::direction({std::sin(rad), 0.0, std::cos(rad)});
        scene.frequency = f_hz;
        const double mag =
            std::abs(scattered_field(layout, mask, resp, scene, f_hz, opts).amplitude);
        mags.push_back(mag);
        peak = std::max(peak, mag);
        cut.angle_deg.push_back(ang);
    }
    if (peak <= 0.0) throw DomainError("pattern cut has no nonzero sample");
    for (double m : mags) {
        const double db = (m > 0.0) ? 20.0 * std::log10(m / peak) : -300.0;
        cut.value_db.push_back(std::max(db, -300.0));
    }
    return cut;
}

double rcs(const ArrayLayout& layout, const PatternMask& mask,
           const UnitCellResponse& resp, const Vec3& inc_dir, const Vec3& obs_dir,
           double f_hz, const FieldOptions& opts) {
    if (!inc_dir.is_unit() || !obs_dir.is_unit())
        throw ConfigError("incidence and observation directions must be unit vectors");
    Scene scene;
    scene.tx = Terminal::direction(inc_dir);
    scene.rx = Terminal::direction(obs_dir);
    scene.frequency = f_hz;
    const std::complex<double> e =
        scattered_field(layout, mask, resp, scene, f_hz, opts).amplitude;
    const double lambda = wavelength(f_hz);
    const double cell_area = layout.period_x * layout.period_y;
    const double scale = cell_area / lambda;
    return 4.0 * pi * scale * scale * std::norm(e);
}

}  // namespace ris
