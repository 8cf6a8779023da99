#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ris/core.hpp"

namespace ris {

/// Two-state behavioral reflection model: complex reflection coefficients
/// sampled on a frequency grid and interpolated piecewise-linearly in
/// (magnitude, unwrapped phase). No extrapolation outside the grid.
struct UnitCellResponse {
    std::vector<double> f_hz;       // strictly increasing
    std::vector<double> mag_on;     // linear magnitude, <= 1
    std::vector<double> phase_on;   // radians, unwrapped
    std::vector<double> mag_off;
    std::vector<double> phase_off;

    void validate() const;
    double f_min() const { return f_hz.front(); }
    double f_max() const { return f_hz.back(); }
};

/// Built-in anchor table. The ON/OFF phase difference runs 224 deg at
/// 22.5 GHz down to 160 deg at 30 GHz (220 deg at 23.5, 170 deg at 29.5);
/// magnitudes fall linearly across the band (OFF 0.94 -> 0.87, ON
/// 0.74 -> 0.50). The OFF phase reference is a linear ramp 0 -> -90 deg;
/// pattern selection by |sum| maximization is invariant to that common
/// reference, so only the difference and the magnitudes matter.
UnitCellResponse default_response();

/// Interpolated complex reflection coefficient of one state.
std::complex<double> reflection(const UnitCellResponse& resp, SwitchState state,
                                double f_hz);

/// Unwrapped ON/OFF phase difference arg(OFF) - arg(ON) [rad].
double phase_difference(const UnitCellResponse& resp, double f_hz);

/// True iff the switch resistances sit inside the window where the cell's
/// two-state behavior stays acceptable: r_on in [4, 10] ohm, r_off >= 1 kohm.
bool sensitivity_acceptable(double r_on_ohm, double r_off_ohm);

/// Load a response table from CSV with header
/// f_hz,mag_on,phase_on_deg,mag_off,phase_off_deg (degrees are unwrapped
/// after conversion to radians).
UnitCellResponse response_from_csv(const std::string& path);

}  // namespace ris
