#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ris/core.hpp"

namespace ris {

/// Lumped model of a shunt RF switch on a matched line: the state
/// resistance in parallel with c_shunt, in series with l_series.
struct SwitchParams {
    double r_on = 3.5;        // [ohm]
    double r_off = 1000.0;    // [ohm]
    double c_shunt = 0.0;     // [F], in parallel with the state resistance
    double l_series = 0.0;    // [H], in series with the RC pair
    double z0 = 50.0;         // [ohm], reference line impedance

    void validate() const;
};

/// Shunt impedance of the given state at frequency f.
std::complex<double> shunt_impedance(const SwitchParams& p, SwitchState state,
                                     double f_hz);

/// Two-port transmission through the shunt branch: S21 = 2Z / (2Z + z0).
std::complex<double> shunt_s21(const SwitchParams& p, SwitchState state, double f_hz);

/// 20*log10|x| with a -inf guard for exact zero.
double to_db(double linear_magnitude);

/// One |S21| measurement used as a fitting target or bound.
struct SwitchMeasurement {
    double f_hz = 0.0;
    SwitchState state = SwitchState::On;
    double s21_db = 0.0;  // signed: isolation 17.4 dB is stored as -17.4
};

struct FitResult {
    SwitchParams params;
    std::vector<double> residuals_db;  // model - target, ON rows only, input order
    double max_abs_residual_db = 0.0;
    bool converged = false;
};

/// Least-squares (r_on, c_shunt, l_series) against the ON-state rows.
/// OFF-state rows never enter the objective: their published losses include
/// line effects outside this lumped model, so they are only sanity bounds.
/// Deterministic: coarse grid, then coordinate descent with shrinking steps;
/// exact objective ties resolve to the smallest (ohm, pF, pH)-scaled norm.
/// If `initial` already fits every ON row to ~zero residual it is returned
/// unchanged.
FitResult fit_switch_params(const std::vector<SwitchMeasurement>& measurements,
                            const SwitchParams& initial);

/// Piecewise I-V curve with a negative-slope transition segment between the
/// high-resistance branch and the low-resistance branch.
struct IVModel {
    double r_off_branch = 1000.0;  // [ohm]
    double v_threshold = 2.0;      // [V] end of the high-resistance branch
    double i_hold = 0.1;           // [A] start of the low-resistance branch
    double r_on_branch = 4.0;      // [ohm]

    void validate() const;
};

enum class IVBranch { Off, Transition, On };

struct OperatingPoint {
    double v = 0.0;  // [V]
    double i = 0.0;  // [A]
    IVBranch branch = IVBranch::Off;
};

enum class BiasKind { Voltage, Current };

/// All intersections of a source load line with the I-V curve.
/// Voltage bias: V = value - I*source_resistance. Current bias:
/// I = value - V/source_resistance (infinite resistance = ideal source).
/// Coincident branch endpoints are reported once (first branch label).
std::vector<OperatingPoint> operating_points(const IVModel& iv, BiasKind bias,
                                             double value,
                                             double source_resistance);

enum class ThermalPhase { Insulating, Metallic };

/// Hysteresis automaton over a temperature trajectory [degC]: switches to
/// metallic at T >= heat_threshold, back to insulating at T <= cool_threshold.
/// A first sample inside [cool, heat] needs an explicit initial phase.
std::vector<ThermalPhase> thermal_phase(
    const std::vector<double>& trajectory_degc,
    std::optional<ThermalPhase> initial = std::nullopt,
    double heat_threshold_degc = 67.0, double cool_threshold_degc = 56.0);

/// Serialize as the key-value text format (keys: r_on_ohm, r_off_ohm,
/// c_shunt_f, l_series_h, z0_ohm), one `key = value` per line.
std::string switch_params_to_text(const SwitchParams& p);
/// Parse the key-value text format; unknown keys are rejected.
SwitchParams switch_params_from_text(const std::string& text);

}  // namespace ris
