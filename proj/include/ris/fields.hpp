#pragma once

#include <complex>
#include <vector>

#include "ris/core.hpp"
#include "ris/unitcell.hpp"

namespace ris {

/// Radiation-pattern exponents. Unit cells reradiate with cos^q_element of
/// the angle off the array normal; q_horn parameterizes terminal-horn
/// directivity D = 2*(q_horn + 1) for link budgets.
struct FieldOptions {
    double q_element = 1.0;
    double q_horn = 49.0;
};

/// Horn directivity implied by its pattern exponent: D = 2*(q + 1).
double horn_directivity(double q_horn);

/// Complex scalar field amplitude at the observation terminal, normalized
/// so a single element with unit reflection and both terminals on
/// boresight at 1 m gives |E| = 1.
struct FieldResult {
    std::complex<double> amplitude;
    double f_hz = 0.0;
};

/// Per-element terminal weight:
///   positional terminal  w = cos^q(theta_element) * exp(-j*k*R) / R
///   directional terminal w = cos^q(theta) * exp(+j*k*(u . r_e))
std::complex<double> terminal_weight(const Terminal& t, const Vec3& element,
                                     double k, double q);

/// Coherent per-column sums S_j of w_tx * w_rx over each column's cells.
/// scattered_field and the synthesis-side column contributions both scale
/// these same sums by the state reflection coefficients, which makes the
/// mask-sum consistency exact rather than approximate.
std::vector<std::complex<double>> column_sums(const ArrayLayout& layout,
                                              const Scene& scene, double f_hz,
                                              const FieldOptions& opts = {});

/// E = sum_j Gamma_state(col j)(f) * S_j over the mask's column states.
FieldResult scattered_field(const ArrayLayout& layout, const PatternMask& mask,
                            const UnitCellResponse& resp, const Scene& scene,
                            double f_hz, const FieldOptions& opts = {});

struct Enhancement {
    double db = 0.0;
    /// Set when the all-OFF reference field is exactly zero; db is +inf.
    bool reference_zero = false;
};

/// 20*log10(|E(mask)| / |E(all-OFF)|) in the same scene.
Enhancement gain_enhancement(const ArrayLayout& layout, const PatternMask& mask,
                             const UnitCellResponse& resp, const Scene& scene,
                             double f_hz, const FieldOptions& opts = {});

/// Far-field cut in the incidence (x-z) plane, normalized to peak = 0 dB.
/// Exact pattern nulls are floored at -300 dB to keep rows finite.
struct PatternCut {
    std::vector<double> angle_deg;  // strictly increasing
    std::vector<double> value_db;   // <= 0, peak exactly 0
};

PatternCut pattern_cut(const ArrayLayout& layout, const PatternMask& mask,
                       const UnitCellResponse& resp, const Terminal& incidence,
                       double f_hz, double start_deg, double stop_deg,
                       double step_deg, const FieldOptions& opts = {});

/// Monostatic/bistatic RCS [m^2] for plane-wave incidence and observation
/// directions: sigma = 4*pi * (p_x*p_y/lambda)^2 * |sum w_t Gamma w_r|^2,
/// normalized so a uniform unit-reflection aperture at normal incidence
/// and observation equals the flat-plate value 4*pi*A^2/lambda^2.
double rcs(const ArrayLayout& layout, const PatternMask& mask,
           const UnitCellResponse& resp, const Vec3& inc_dir, const Vec3& obs_dir,
           double f_hz, const FieldOptions& opts = {});

}  // namespace ris
