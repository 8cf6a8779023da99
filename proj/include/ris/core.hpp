#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ris {

/// Speed of light in vacuum [m/s].
inline constexpr double c0 = 299'792'458.0;
inline constexpr double pi = 3.14159265358979323846;

/// Invalid user-supplied configuration (bad file, bad key, bad value).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but outside the model's domain
/// (out-of-band frequency, oversized search space, degenerate geometry).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wavenumber 2*pi*f/c [rad/m].
double wavenumber(double f_hz);

/// Wavelength c/f [m].
double wavelength(double f_hz);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    /// True when |norm() - 1| <= 1e-12 (requirement for direction vectors).
    bool is_unit() const;
};

/// Planar element grid in z = 0, centered on the origin.
struct ArrayLayout {
    int n_rows = 0;
    int n_cols = 0;
    double period_x = 0.0;  // [m]
    double period_y = 0.0;  // [m]

    /// Position of element (row i, column j); centering puts the grid's
    /// centroid exactly at the origin.
    Vec3 position(int i, int j) const;
    double aperture_x() const { return n_cols * period_x; }
    double aperture_y() const { return n_rows * period_y; }
};

/// Validated constructor; rejects non-positive dimensions.
ArrayLayout make_layout(int n_rows, int n_cols, double period_x, double period_y);

/// Aperture extents in wavelengths: (x-extent/lambda, y-extent/lambda).
std::pair<double, double> electrical_size(const ArrayLayout& layout, double f_hz);

/// Euclidean distance from every element to `point`, row-major n_rows*n_cols.
/// Rejects points coincident with an element.
std::vector<double> element_distances(const ArrayLayout& layout, const Vec3& point);

/// One bias state of a switch/column. OFF is the preferred tie-break state
/// everywhere a tie can occur.
enum class SwitchState : std::uint8_t { Off = 0, On = 1 };

/// 1-bit state of each bias column, optionally with the pre-collapse
/// per-cell states that produced it.
struct PatternMask {
    std::vector<std::uint8_t> column_states;                       // 0=OFF, 1=ON
    std::optional<std::vector<std::vector<std::uint8_t>>> cell_states;

    int n_cols() const { return static_cast<int>(column_states.size()); }
};

/// Serialize as a 0/1 string, column 0 first.
std::string mask_to_bits(const PatternMask& mask);
/// Parse a 0/1 string; rejects other characters and empty input.
PatternMask mask_from_bits(const std::string& bits);
/// Serialize as the JSON object {"columns":[0|1,...]}.
std::string mask_to_json(const PatternMask& mask);
/// Parse the JSON form; validates shape and values.
PatternMask mask_from_json(const std::string& text);

/// A transmitter or receiver: either a point source at a position [m]
/// (z > 0) or a plane-wave unit direction (z > 0).
struct Terminal {
    enum class Kind { Position, Direction };
    Kind kind = Kind::Direction;
    Vec3 v{0.0, 0.0, 1.0};

    static Terminal position(const Vec3& p);
    static Terminal direction(const Vec3& u);
};

/// Tx/Rx placement, polarizations, and nominal frequency of a measurement
/// or simulation arrangement. Field operations take the evaluation
/// frequency explicitly; `frequency` is the scenario's design value.
struct Scene {
    Terminal tx;
    Terminal rx;
    Vec3 polarization_tx{1.0, 0.0, 0.0};
    Vec3 polarization_rx{1.0, 0.0, 0.0};
    double frequency = 0.0;  // [Hz]
};

/// Validates terminal half-space and polarization unit length.
Scene make_scene(const Terminal& tx, const Terminal& rx, double f_hz,
                 const Vec3& pol_tx = {1.0, 0.0, 0.0},
                 const Vec3& pol_rx = {1.0, 0.0, 0.0});

}  // namespace ris
