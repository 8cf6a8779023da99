#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ris/core.hpp"
#include "ris/fields.hpp"
#include "ris/unitcell.hpp"

namespace ris {

/// Parse flat "section.key = value" text: one pair per line, '#' starts a
/// comment, blank lines ignored, duplicate keys rejected.
std::map<std::string, std::string> parse_key_values(std::istream& in);

/// One terminal of the scene as configured (angles in the x-z plane,
/// measured off the array normal).
struct TerminalConfig {
    enum class Kind { Position, Direction };
    Kind kind = Kind::Direction;
    double angle_deg = 0.0;
    double distance_m = 0.2;  // used only by positional terminals

    Terminal to_terminal() const;
};

/// Fully-resolved scenario: SI units internally; the config file speaks
/// GHz, degrees, and centimeters.
struct ScenarioConfig {
    int rows = 20;
    int cols = 20;
    double period_x_m = 2.35e-3;
    double period_y_m = 2.35e-3;

    double design_f_hz = 27.5e9;
    double band_start_hz = 23.5e9;
    double band_stop_hz = 29.5e9;
    int band_points = 13;

    TerminalConfig tx;  // defaults to a positional feed, 45 deg at 20 cm
    TerminalConfig rx;  // defaults to a boresight observation direction

    std::string unitcell_table;  // empty: built-in measured response

    enum class Optimizer { Quantized, Greedy, Exhaustive };
    Optimizer optimizer = Optimizer::Exhaustive;

    bool sweep_reoptimize = true;

    double cut_start_deg = -90.0;
    double cut_stop_deg = 90.0;
    double cut_step_deg = 0.25;
    std::string cut_mask = "optimized";  // or "all-off", or a mask JSON path

    double q_element = 1.0;
    double horn_q = 49.0;

    std::string out_mask;     // empty: stdout
    std::string out_summary;  // empty: stdout only
    std::string out_csv;      // empty: stdout

    ArrayLayout layout() const;
    UnitCellResponse response() const;
    Scene scene_at(double f_hz) const;
    Vec3 target_direction() const;
    FieldOptions field_options() const;
};

/// Load and validate a scenario file; unknown keys are errors.
ScenarioConfig load_scenario(const std::string& path);

/// Compact human-independent number formatting shared by all CSV and
/// summary writers (dot decimal, locale independent).
std::string format_number(double v);

}  // namespace ris
