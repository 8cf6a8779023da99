#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ris/core.hpp"
#include "ris/fields.hpp"
#include "ris/unitcell.hpp"

namespace ris {

/// Ideal continuous phase each cell should add so the wave from the feed
/// leaves along the target direction u_r:
///   phi(i,j) = k*|r_e - r_feed| - k*(u_r . r_e),  wrapped to (-pi, pi].
/// Row-major: profile[i*n_cols + j].
/// A directional feed is treated as a source receding along its direction
/// (plane-wave limit), so only the -k*(u_inc . r_e) path-difference term
/// varies across the aperture.
std::vector<double> phase_profile(const ArrayLayout& layout, const Terminal& feed,
                                  const Vec3& target_dir, double f_hz);

/// Wrap an angle in radians to (-pi, pi].
double wrap_phase(double phi);

/// Per-cell 1-bit states: pick the state whose reflection phase is closer
/// (in wrapped distance) to the ideal phase; exact ties go to OFF.
std::vector<std::vector<std::uint8_t>> quantize_1bit(
    const std::vector<double>& profile, const ArrayLayout& layout,
    const UnitCellResponse& resp, double f_hz);

/// Collapse per-cell states to one state per column by majority vote;
/// exact ties go to OFF. The returned mask keeps the cell matrix too.
PatternMask collapse_columns(const std::vector<std::vector<std::uint8_t>>& cells);

/// Precomputed complex contribution of each column to the scattered field
/// in one scene, for each switch state. scattered_field(mask) equals
/// sum_j (mask_j ? c_on[j] : c_off[j]) exactly.
struct ColumnContributions {
    std::vector<std::complex<double>> c_on;
    std::vector<std::complex<double>> c_off;
    double f_hz = 0.0;
    std::size_t n_cols() const { return c_on.size(); }
};

ColumnContributions column_contributions(const ArrayLayout& layout,
                                         const UnitCellResponse& resp,
                                         const Scene& scene, double f_hz,
                                         const FieldOptions& opts = {});

/// Exact optimum of |sum_j contribution_j| over all 2^n column masks.
/// Column 0 is the most significant bit of the enumeration order, and the
/// first mask attaining the optimum wins, so ties resolve to the
/// lexicographically smallest mask. Rejects n > 24.
PatternMask optimize_exhaustive(const ColumnContributions& contrib);

/// Cyclic first-improvement flip ascent run from the all-OFF mask and,
/// when provided, from the supplied initial mask; the better endpoint wins
/// (exact ties pick the lexicographically smaller mask). Never returns a
/// mask worse than the initial one.
PatternMask optimize_greedy(const ColumnContributions& contrib,
                            const std::optional<PatternMask>& initial = std::nullopt);

/// |sum_j contribution_j| for a column mask.
double mask_field_magnitude(const ColumnContributions& contrib,
                            const PatternMask& mask);

}  // namespace ris
