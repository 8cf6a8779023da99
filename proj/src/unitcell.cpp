#include "ris/unitcell.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ris {

namespace {

constexpr double deg = pi / 180.0;

double lerp(double a, double b, double t) { return a + (b - a) * t; }

// Index of the segment containing f, plus the interpolation parameter.
std::pair<std::size_t, double> locate(const std::vector<double>& grid, double f) {
    if (f < grid.front() || f > grid.back())
        throw DomainError("frequency outside the tabulated band");
    std::size_t k = 0;
    while (k + 2 < grid.size() && f > grid[k + 1]) ++k;
    const double t = (f - grid[k]) / (grid[k + 1] - grid[k]);
    return {k, t};
}

}  // namespace

void UnitCellResponse::validate() const {
    const std::size_t n = f_hz.size();
    if (n < 2) throw ConfigError("response table needs at least two samples");
    if (mag_on.size() != n || phase_on.size() != n || mag_off.size() != n ||
        phase_off.size() != n)
        throw ConfigError("response table columns have mismatched lengths");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(f_hz[i] < f_hz[i + 1]))
            throw ConfigError("response sample frequencies must be strictly increasing");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mag_on[i] >= 0.0 && mag_on[i] <= 1.0) ||
            !(mag_off[i] >= 0.0 && mag_off[i] <= 1.0))
            throw ConfigError("reflection magnitudes must lie in [0, 1]");
        const double dphi = phase_off[i] - phase_on[i];
        if (dphi < 150.0 * deg || dphi > 230.0 * deg)
            throw ConfigError("ON/OFF phase difference outside [150, 230] deg");
    }
}

UnitCellResponse default_response() {
    UnitCellResponse r;
    r.f_hz = {22.5e9, 23.5e9, 29.5e9, 30.0e9};
    const std::vector<double> dphi_deg = {224.0, 220.0, 170.0, 160.0};
    for (std::size_t i = 0; i < r.f_hz.size(); ++i) {
        const double t = (r.f_hz[i] - 22.5e9) / (30.0e9 - 22.5e9);
        const double off_ph = lerp(0.0, -90.0, t) * deg;
        r.mag_off.push_back(lerp(0.94, 0.87, t));
        r.mag_on.push_back(lerp(0.74, 0.50, t));
        r.phase_off.push_back(off_ph);
        r.phase_on.push_back(off_ph - dphi_deg[i] * deg);
    }
    r.validate();
    return r;
}

std::complex<double> reflection(const UnitCellResponse& resp, SwitchState state,
                                double f_hz) {
    resp.validate();
    const auto [k, t] = locate(resp.f_hz, f_hz);
    const auto& mag = (state == SwitchState::On) ? resp.mag_on : resp.mag_off;
    const auto& ph = (state == SwitchState::On) ? resp.phase_on : resp.phase_off;
    const double m = lerp(mag[k], mag[k + 1], t);
    const double p = lerp(ph[k], ph[k + 1], t);
    return std::polar(m, p);
}

double phase_difference(const UnitCellResponse& resp, double f_hz) {
    resp.validate();
    const auto [k, t] = locate(resp.f_hz, f_hz);
    const double off = lerp(resp.phase_off[k], resp.phase_off[k + 1], t);
    const double on = lerp(resp.phase_on[k], resp.phase_on[k + 1], t);
    return off - on;
}

bool sensitivity_acceptable(double r_on_ohm, double r_off_ohm) {
    if (!(r_on_ohm > 0.0) || !(r_off_ohm > 0.0))
        throw DomainError("resistances must be positive");
    return r_on_ohm >= 4.0 && r_on_ohm <= 10.0 && r_off_ohm >= 1000.0;
}

UnitCellResponse response_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open response table: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty response table: " + path);
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (strip(line) != "f_hz,mag_on,phase_on_deg,mag_off,phase_off_deg")
        throw ConfigError(
            "response table must start with header "
            "f_hz,mag_on,phase_on_deg,mag_off,phase_off_deg");

    UnitCellResponse r;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) {
            try {
                vals.push_back(std::stod(strip(cell)));
            } catch (const std::exception&) {
                throw ConfigError("response table line " + std::to_string(lineno) +
                                  ": bad number '" + strip(cell) + "'");
            }
        }
        if (vals.size() != 5)
            throw ConfigError("response table line " + std::to_string(lineno) +
                              ": expected 5 columns");
        r.f_hz.push_back(vals[0]);
        r.mag_on.push_back(vals[1]);
        r.phase_on.push_back(vals[2] * deg);
        r.mag_off.push_back(vals[3]);
        r.phase_off.push_back(vals[4] * deg);
    }

    // Unwrap each phase column so interpolation never crosses a 2*pi seam.
    for (auto* col : {&r.phase_on, &r.phase_off}) {
        for (std::size_t i = 1; i < col->size(); ++i) {
            double& p = (*col)[i];
            const double prev = (*col)[i - 1];
            while (p - prev > pi) p -= 2.0 * pi;
            while (p - prev < -pi) p += 2.0 * pi;
        }
    }
    r.validate();
    return r;
}

}  // namespace ris
