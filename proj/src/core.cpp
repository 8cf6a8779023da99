#include "ris/core.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace ris {

double wavenumber(double f_hz) {
    if (!(f_hz > 0.0)) throw DomainError("frequency must be positive");
    return 2.0 * pi * f_hz / c0;
}

double wavelength(double f_hz) {
    if (!(f_hz > 0.0)) throw DomainError("frequency must be positive");
    return c0 / f_hz;
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool Vec3::is_unit() const { return std::abs(norm() - 1.0) <= 1e-12; }

Vec3 ArrayLayout::position(int i, int j) const {
    return {(j - (n_cols - 1) / 2.0) * period_x,
            (i - (n_rows - 1) / 2.0) * period_y, 0.0};
}

ArrayLayout make_layout(int n_rows, int n_cols, double period_x, double period_y) {
    if (n_rows < 1 || n_cols < 1)
        throw ConfigError("layout dimensions must be at least 1x1");
    if (!(period_x > 0.0) || !(period_y > 0.0))
        throw ConfigError("layout periods must be positive");
    return ArrayLayout{n_rows, n_cols, period_x, period_y};
}

std::pair<double, double> electrical_size(const ArrayLayout& layout, double f_hz) {
    const double lambda = wavelength(f_hz);
    return {layout.aperture_x() / lambda, layout.aperture_y() / lambda};
}

std::vector<double> element_distances(const ArrayLayout& layout, const Vec3& point) {
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(layout.n_rows) * layout.n_cols);
    for (int i = 0; i < layout.n_rows; ++i) {
        for (int j = 0; j < layout.n_cols; ++j) {
            const double r = (point - layout.position(i, j)).norm();
            if (r == 0.0) throw DomainError("point coincides with an array element");
            d.push_back(r);
        }
    }
    return d;
}

std::string mask_to_bits(const PatternMask& mask) {
    std::string s;
    s.reserve(mask.column_states.size());
    for (auto b : mask.column_states) s.push_back(b ? '1' : '0');
    return s;
}

PatternMask mask_from_bits(const std::string& bits) {
    if (bits.empty()) throw ConfigError("empty mask string");
    PatternMask m;
    m.column_states.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw ConfigError("mask string may contain only 0 and 1");
        m.column_states.push_back(c == '1' ? 1 : 0);
    }
    return m;
}

std::string mask_to_json(const PatternMask& mask) {
    nlohmann::json j;
    j["columns"] = nlohmann::json::array();
    for (auto b : mask.column_states) j["columns"].push_back(static_cast<int>(b));
    return j.dump();
}

PatternMask mask_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid mask JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array())
        throw ConfigError("mask JSON must be an object with a \"columns\" array");
    PatternMask m;
    for (const auto& v : j["columns"]) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
            throw ConfigError("mask JSON columns must contain only 0 or 1");
        m.column_states.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    if (m.column_states.empty()) throw ConfigError("mask JSON has no columns");
    return m;
}

Terminal Terminal::position(const Vec3& p) { return Terminal{Kind::Position, p}; }

Terminal Terminal::direction(const Vec3& u) { return Terminal{Kind::Direction, u}; }

Scene make_scene(const Terminal& tx, const Terminal& rx, double f_hz,
                 const Vec3& pol_tx, const Vec3& pol_rx) {
    auto check = [](const Terminal& t, const char* name) {
        if (t.v.z <= 0.0)
            throw DomainError(std::string(name) +
                              " terminal must lie in the z > 0 half-space");
        if (t.kind == Terminal::Kind::Direction && !t.v.is_unit())
            throw DomainError(std::string(name) +
                              " direction must be unit length");
    };
    check(tx, "tx");
    check(rx, "rx");
    if (!pol_tx.is_unit() || !pol_rx.is_unit())
        throw DomainError("polarizations must be unit length");
    if (!(f_hz > 0.0)) throw DomainError("scene frequency must be positive");
    return Scene{tx, rx, pol_tx, pol_rx, f_hz};
}

}  // namespace ris
